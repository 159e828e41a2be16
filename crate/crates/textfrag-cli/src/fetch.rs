//! The `fetch-corpus` subcommand: download a plain-text book and split it
//! into per-section files ready for the pipeline.

use std::path::PathBuf;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::Args;
use regex::Regex;

use textfrag::{split_paragraphs, tokenize};

/// Plain-text edition of *Mars* by Percival Lowell (1895) on Project
/// Gutenberg.
const DEFAULT_URL: &str = "https://www.gutenberg.org/ebooks/40395.txt.utf-8";

/// Heading lines: a chapter or section numbered with Roman numerals on a
/// line of its own, optionally followed by a period.
const DEFAULT_SECTION_PATTERN: &str = r"^\s*(CHAPTER\s+[IVXLC]+\.?.*|[IVXLC]+\.?)\s*$";

#[derive(Args, Debug)]
pub struct FetchArgs {
    /// Source URL of the plain-text edition
    #[arg(long, default_value = DEFAULT_URL)]
    pub url: String,

    /// Directory for the raw download and the extracted section files
    #[arg(long, default_value = "corpus")]
    pub output_dir: PathBuf,

    /// Regex matching heading lines that start a new section; editions vary,
    /// so the pattern is configurable
    #[arg(long, default_value = DEFAULT_SECTION_PATTERN)]
    pub section_pattern: String,
}

pub fn fetch_corpus(args: &FetchArgs) -> Result<()> {
    let pattern = Regex::new(&format!("(?m){}", args.section_pattern))
        .context("compiling --section-pattern")?;

    let client = reqwest::blocking::Client::builder()
        .timeout(Duration::from_secs(120))
        .build()
        .context("building HTTP client")?;
    let response = client
        .get(&args.url)
        .send()
        .with_context(|| format!("downloading {}", args.url))?;
    if !response.status().is_success() {
        bail!("downloading {}: HTTP {}", args.url, response.status());
    }
    let raw = response.text().context("decoding response body")?;

    std::fs::create_dir_all(&args.output_dir)
        .with_context(|| format!("creating {}", args.output_dir.display()))?;
    let raw_path = args.output_dir.join("raw.txt");
    std::fs::write(&raw_path, &raw)
        .with_context(|| format!("writing {}", raw_path.display()))?;

    let body = strip_gutenberg_boilerplate(&raw);
    let sections = split_sections(body, &pattern);
    if sections.is_empty() {
        bail!(
            "no section headings matched `{}`; adjust --section-pattern for this edition",
            args.section_pattern
        );
    }

    println!("{:<18} {:>10} {:>8}  heading", "file", "paragraphs", "words");
    for (i, (heading, text)) in sections.iter().enumerate() {
        let file = format!("section_{:02}.txt", i + 1);
        let path = args.output_dir.join(&file);
        std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
        let paragraphs = split_paragraphs(text).map(|p| p.len()).unwrap_or(0);
        let words = tokenize(text).len();
        let marker = if paragraphs >= 20 { "*" } else { " " };
        println!("{file:<18} {paragraphs:>9}{marker} {words:>8}  {heading}");
    }
    println!(
        "\n{} sections written to {} (* = at least 20 paragraphs, the corpus-table filter)",
        sections.len(),
        args.output_dir.display()
    );
    Ok(())
}

/// Cut everything outside the `*** START/END OF ... ***` markers when
/// present.
pub fn strip_gutenberg_boilerplate(text: &str) -> &str {
    let mut body = text;
    if let Some(start) = body.find("*** START OF") {
        if let Some(line_end) = body[start..].find('\n') {
            body = &body[start + line_end + 1..];
        }
    }
    if let Some(end) = body.find("*** END OF") {
        body = &body[..end];
    }
    body
}

/// Split text into `(heading, body)` pairs at lines matching the pattern.
/// Text before the first heading is dropped; sections without a single
/// non-blank line are skipped.
pub fn split_sections(text: &str, pattern: &Regex) -> Vec<(String, String)> {
    let mut headings: Vec<(usize, usize, String)> = Vec::new();
    for m in pattern.find_iter(text) {
        let heading = m.as_str().trim().to_string();
        headings.push((m.start(), m.end(), heading));
    }
    let mut sections = Vec::new();
    for (i, (_, end, heading)) in headings.iter().enumerate() {
        let body_end = headings
            .get(i + 1)
            .map(|(next_start, _, _)| *next_start)
            .unwrap_or(text.len());
        let body = text[*end..body_end].trim();
        if !body.is_empty() {
            sections.push((heading.clone(), format!("{body}\n")));
        }
    }
    sections
}
