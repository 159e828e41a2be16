//! Text ingestion: paragraph splitting, tokenization, stopword removal,
//! stemming and per-paragraph term-frequency counting.
//!
//! Paragraph lengths (`len[i]`) are word counts *before* stopword removal,
//! so a paragraph of 500 words keeps length 500 no matter how many of them
//! are function words. Term maps hold stemmed, stopword-free terms.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
pub use crate::porter::stem;

/// The SMART English stopword list shipped with the crate.
pub const SMART_STOPWORDS: &str = include_str!("../data/stopwords_smart.txt");

/// One preprocessed paragraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Paragraph {
    /// 1-based position in the document.
    pub index: usize,
    /// Word count before stopword removal.
    pub length: usize,
    /// Stemmed term -> occurrence count. May be empty when every word was a
    /// stopword.
    pub terms: BTreeMap<String, u32>,
}

/// An ordered sequence of preprocessed paragraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    paragraphs: Vec<Paragraph>,
}

impl Document {
    /// Build a document from prepared paragraphs, enforcing the type
    /// invariants (contiguous 1-based indices, positive lengths, positive
    /// term counts, no empty terms).
    pub fn from_paragraphs(paragraphs: Vec<Paragraph>) -> Result<Self> {
        if paragraphs.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (pos, par) in paragraphs.iter().enumerate() {
            if par.index != pos + 1 {
                return Err(Error::InvalidInput(format!(
                    "paragraph at position {} has index {}",
                    pos + 1,
                    par.index
                )));
            }
            if par.length == 0 {
                return Err(Error::InvalidInput(format!(
                    "paragraph {} has zero length",
                    par.index
                )));
            }
            if par.terms.iter().any(|(t, &c)| t.is_empty() || c == 0) {
                return Err(Error::InvalidInput(format!(
                    "paragraph {} has an empty term or a zero count",
                    par.index
                )));
            }
        }
        Ok(Document { paragraphs })
    }

    /// Number of paragraphs (`n`).
    pub fn n(&self) -> usize {
        self.paragraphs.len()
    }

    pub fn paragraphs(&self) -> &[Paragraph] {
        &self.paragraphs
    }

    /// Paragraph by 1-based index.
    pub fn paragraph(&self, index: usize) -> &Paragraph {
        &self.paragraphs[index - 1]
    }

    /// Word counts `len[1..n]` as segmenter input.
    pub fn lengths(&self) -> Vec<u64> {
        self.paragraphs.iter().map(|p| p.length as u64).collect()
    }

    /// Total word count of the document.
    pub fn total_words(&self) -> u64 {
        self.paragraphs.iter().map(|p| p.length as u64).sum()
    }
}

/// Preprocessing parameters. Only the stopword list varies; stemming is
/// always the Porter stemmer and paragraphs are delimited by blank lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreprocessConfig {
    pub stopwords: BTreeSet<String>,
}

impl PreprocessConfig {
    /// The shipped SMART stopword list.
    pub fn smart() -> Self {
        PreprocessConfig {
            stopwords: parse_stopword_list(SMART_STOPWORDS),
        }
    }

    /// No stopword filtering at all.
    pub fn no_stopwords() -> Self {
        PreprocessConfig {
            stopwords: BTreeSet::new(),
        }
    }

    pub fn with_stopwords(stopwords: BTreeSet<String>) -> Self {
        PreprocessConfig { stopwords }
    }
}

impl Default for PreprocessConfig {
    fn default() -> Self {
        PreprocessConfig::smart()
    }
}

/// Parse a stopword file: one word per line, `#` starts a comment, blank
/// lines ignored. Entries are lowercased.
pub fn parse_stopword_list(text: &str) -> BTreeSet<String> {
    text.lines()
        .map(|line| match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        })
        .map(str::trim)
        .filter(|word| !word.is_empty())
        .map(str::to_lowercase)
        .collect()
}

/// Split raw text into paragraphs: maximal runs of non-blank lines,
/// delimited by one or more blank (or whitespace-only) lines, trimmed.
pub fn split_paragraphs(raw: &str) -> Result<Vec<&str>> {
    let mut paragraphs = Vec::new();
    let mut start: Option<usize> = None;
    let mut end = 0usize;
    let mut offset = 0usize;
    for line in raw.split_inclusive('\n') {
        if line.trim().is_empty() {
            if let Some(s) = start.take() {
                paragraphs.push(raw[s..end].trim());
            }
        } else {
            if start.is_none() {
                start = Some(offset);
            }
            end = offset + line.len();
        }
        offset += line.len();
    }
    if let Some(s) = start {
        paragraphs.push(raw[s..end].trim());
    }
    if paragraphs.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(paragraphs)
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

/// Split text into lowercase word tokens. A token is a maximal run of
/// alphabetic characters; apostrophes *inside* a word ("don't") are kept and
/// normalized to `'`. Digits and punctuation separate tokens, and runs
/// without any alphabetic character produce no token.
pub fn tokenize(text: &str) -> Vec<String> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut current = String::new();
    for (i, &c) in chars.iter().enumerate() {
        if c.is_alphabetic() {
            current.extend(c.to_lowercase());
        } else if is_apostrophe(c)
            && !current.is_empty()
            && chars.get(i + 1).is_some_and(|&n| n.is_alphabetic())
        {
            current.push('\'');
        } else if !current.is_empty() {
            tokens.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    tokens
}

/// Drop every token that appears in the stopword list, preserving order.
pub fn remove_stopwords(tokens: Vec<String>, stopwords: &BTreeSet<String>) -> Vec<String> {
    tokens
        .into_iter()
        .filter(|t| !stopwords.contains(t))
        .collect()
}

/// Full preprocessing pipeline: paragraphs -> tokens -> (length before
/// stopword removal) -> stopword removal -> stemming -> term counts.
///
/// Paragraph blocks without a single word (pure punctuation or digits) are
/// dropped; they carry no length and no terms.
pub fn preprocess(raw: &str, cfg: &PreprocessConfig) -> Result<Document> {
    let mut paragraphs = Vec::new();
    for block in split_paragraphs(raw)? {
        let tokens = tokenize(block);
        if tokens.is_empty() {
            continue;
        }
        let length = tokens.len();
        let mut terms: BTreeMap<String, u32> = BTreeMap::new();
        for token in remove_stopwords(tokens, &cfg.stopwords) {
            let term = stem(&token);
            // Stemming can land on a stopword ("needing" -> "need"); term
            // maps must stay stopword-free.
            if term.is_empty() || cfg.stopwords.contains(&term) {
                continue;
            }
            *terms.entry(term).or_insert(0) += 1;
        }
        paragraphs.push(Paragraph {
            index: paragraphs.len() + 1,
            length,
            terms,
        });
    }
    if paragraphs.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(Document { paragraphs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_on_blank_lines() {
        assert_eq!(split_paragraphs("A.\n\nB.").unwrap(), vec!["A.", "B."]);
        assert_eq!(
            split_paragraphs("A.\n\n\n\nB.\n").unwrap(),
            vec!["A.", "B."]
        );
        assert_eq!(
            split_paragraphs("  A line\nstill A\n \t \nB\n").unwrap(),
            vec!["A line\nstill A", "B"]
        );
    }

    #[test]
    fn empty_input_is_an_error() {
        assert_eq!(split_paragraphs(""), Err(Error::EmptyInput));
        assert_eq!(split_paragraphs("\n  \n\t\n"), Err(Error::EmptyInput));
    }

    #[test]
    fn tokenize_rules() {
        assert_eq!(
            tokenize("The planet's disk."),
            vec!["the", "planet's", "disk"]
        );
        assert_eq!(tokenize(""), Vec::<String>::new());
        assert_eq!(tokenize("Mars, 1895!"), vec!["mars"]);
        assert_eq!(tokenize("x2y"), vec!["x", "y"]);
        assert_eq!(tokenize("'tis a''b"), vec!["tis", "a", "b"]);
    }

    #[test]
    fn stopword_removal_preserves_order() {
        let stop: BTreeSet<String> = ["the".to_string()].into();
        let tokens = vec!["the".into(), "red".into(), "planet".into()];
        assert_eq!(remove_stopwords(tokens, &stop), vec!["red", "planet"]);
        assert_eq!(remove_stopwords(vec![], &stop), Vec::<String>::new());
        let all_stop = vec!["the".into(), "the".into()];
        assert_eq!(remove_stopwords(all_stop, &stop), Vec::<String>::new());
    }

    #[test]
    fn stopword_file_parsing() {
        let set = parse_stopword_list("# header\nThe\n\n  and # trailing\nof\n");
        assert_eq!(
            set.into_iter().collect::<Vec<_>>(),
            vec!["and", "of", "the"]
        );
    }

    #[test]
    fn smart_list_is_plausible() {
        let cfg = PreprocessConfig::smart();
        for word in ["the", "of", "and", "a", "is", "was", "be"] {
            assert!(cfg.stopwords.contains(word), "missing {word}");
        }
        for word in ["planet", "atmosphere", "water", "mars"] {
            assert!(!cfg.stopwords.contains(word), "{word} wrongly listed");
        }
        assert!(cfg.stopwords.len() > 500, "got {}", cfg.stopwords.len());
    }

    #[test]
    fn preprocess_hand_trace() {
        let cfg = PreprocessConfig::with_stopwords(["the".to_string()].into());
        let doc = preprocess("The red red planet", &cfg).unwrap();
        assert_eq!(doc.n(), 1);
        let par = doc.paragraph(1);
        assert_eq!(par.length, 4);
        assert_eq!(par.terms.get("red"), Some(&2));
        assert_eq!(par.terms.get("planet"), Some(&1));
        assert_eq!(par.terms.len(), 2);
    }

    #[test]
    fn identical_paragraphs_get_identical_term_maps() {
        let cfg = PreprocessConfig::smart();
        let doc = preprocess("Waters of the canal.\n\nWaters of the canal.", &cfg).unwrap();
        assert_eq!(doc.n(), 2);
        assert_eq!(doc.paragraph(1).terms, doc.paragraph(2).terms);
        assert_eq!(doc.paragraph(1).length, doc.paragraph(2).length);
    }

    #[test]
    fn all_stopword_paragraph_is_legal_and_empty() {
        let cfg = PreprocessConfig::smart();
        let doc = preprocess("Planets shine.\n\nIt was the they of.", &cfg).unwrap();
        assert_eq!(doc.n(), 2);
        assert_eq!(doc.paragraph(2).length, 5);
        assert!(doc.paragraph(2).terms.is_empty());
    }

    #[test]
    fn wordless_blocks_are_dropped() {
        let cfg = PreprocessConfig::smart();
        let doc = preprocess("Planets shine.\n\n* * *\n\n1895\n\nCanals abound.", &cfg).unwrap();
        assert_eq!(doc.n(), 2);
        assert_eq!(preprocess("* * *\n\n42", &cfg), Err(Error::EmptyInput));
    }

    #[test]
    fn lengths_count_words_before_stopword_removal() {
        let cfg = PreprocessConfig::smart();
        let raw = "The atmosphere of the planet is thin.\n\nIt was seen.";
        let doc = preprocess(raw, &cfg).unwrap();
        assert_eq!(doc.lengths(), vec![7, 3]);
        assert_eq!(doc.total_words(), tokenize(raw).len() as u64);
    }

    #[test]
    fn document_invariant_checks() {
        let ok = Paragraph {
            index: 1,
            length: 1,
            terms: BTreeMap::new(),
        };
        assert!(Document::from_paragraphs(vec![ok.clone()]).is_ok());
        assert!(Document::from_paragraphs(vec![]).is_err());
        let bad_index = Paragraph {
            index: 2,
            ..ok.clone()
        };
        assert!(Document::from_paragraphs(vec![bad_index]).is_err());
        let bad_len = Paragraph {
            length: 0,
            ..ok.clone()
        };
        assert!(Document::from_paragraphs(vec![bad_len]).is_err());
        let mut terms = BTreeMap::new();
        terms.insert(String::new(), 1);
        let bad_term = Paragraph { terms, ..ok };
        assert!(Document::from_paragraphs(vec![bad_term]).is_err());
    }
}
