//! Lexical-cohesion similarity curve.
//!
//! Each paragraph is represented by its k most frequent terms. For every
//! paragraph boundary, the paragraphs inside a window on each side are
//! combined into one vector, weighted by distance from the boundary
//! (triangular weights, nearest paragraph heaviest), and the two window
//! vectors are compared with the cosine coefficient.

use std::collections::BTreeMap;

use crate::corpus::{Document, Paragraph};
use crate::error::{Error, Result};

/// Sparse non-negative term vector. Zero-weight entries are never stored.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TermVector {
    weights: BTreeMap<String, f64>,
}

impl TermVector {
    pub fn zero() -> Self {
        TermVector::default()
    }

    /// Build from term/weight pairs; non-positive weights are rejected.
    pub fn from_weights<I, S>(weights: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, f64)>,
        S: Into<String>,
    {
        let mut map = BTreeMap::new();
        for (term, w) in weights {
            if !w.is_finite() || w <= 0.0 {
                return Err(Error::InvalidInput(format!(
                    "term weight must be finite and positive, got {w}"
                )));
            }
            map.insert(term.into(), w);
        }
        Ok(TermVector { weights: map })
    }

    pub fn weight(&self, term: &str) -> f64 {
        self.weights.get(term).copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.weights.iter().map(|(t, &w)| (t.as_str(), w))
    }

    /// Add `scale * other` termwise.
    fn add_scaled(&mut self, other: &TermVector, scale: f64) {
        for (term, w) in &other.weights {
            *self.weights.entry(term.clone()).or_insert(0.0) += w * scale;
        }
    }

    fn norm(&self) -> f64 {
        self.weights.values().map(|w| w * w).sum::<f64>().sqrt()
    }
}

/// Sliding-window parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowConfig {
    /// Number of most frequent terms kept per paragraph (k).
    pub top_terms: usize,
    /// Paragraphs considered on each side of a boundary (W).
    pub window: usize,
}

impl WindowConfig {
    pub fn new(top_terms: usize, window: usize) -> Result<Self> {
        if top_terms < 1 {
            return Err(Error::InvalidInput("top_terms must be >= 1".into()));
        }
        if window < 1 {
            return Err(Error::InvalidInput("window must be >= 1".into()));
        }
        Ok(WindowConfig { top_terms, window })
    }
}

impl Default for WindowConfig {
    fn default() -> Self {
        WindowConfig {
            top_terms: 50,
            window: 3,
        }
    }
}

/// Which side of a boundary a window covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Boundary similarities `sim[1..n-1]`; boundary `b` sits between paragraphs
/// `b` and `b+1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityCurve {
    values: Vec<f64>,
}

impl SimilarityCurve {
    pub fn new(values: Vec<f64>) -> Self {
        SimilarityCurve { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Similarity at boundary `b` (1-based, `1..=len`).
    pub fn sim(&self, b: usize) -> f64 {
        self.values[b - 1]
    }

    /// CSV export: header plus one `boundary,similarity` row, six decimals.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("boundary,similarity\n");
        for (i, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{},{:.6}\n", i + 1, v));
        }
        out
    }
}

/// The k highest-frequency terms of a paragraph, weighted by raw frequency.
/// Ties at the cutoff go to the lexicographically smaller term.
pub fn top_k_terms(paragraph: &Paragraph, k: usize) -> TermVector {
    let mut entries: Vec<(&String, u32)> = paragraph.terms.iter().map(|(t, &c)| (t, c)).collect();
    // BTreeMap iteration is already term-ascending; a stable sort by count
    // keeps that order within equal counts.
    entries.sort_by(|a, b| b.1.cmp(&a.1));
    let weights = entries
        .into_iter()
        .take(k)
        .map(|(t, c)| (t.clone(), f64::from(c)))
        .collect();
    TermVector { weights }
}

/// Cosine coefficient of two non-negative vectors, clamped to [0, 1].
/// Zero vectors have similarity 0.
pub fn cosine(u: &TermVector, v: &TermVector) -> f64 {
    if u.is_zero() || v.is_zero() {
        return 0.0;
    }
    let mut dot = 0.0;
    for (term, w) in &u.weights {
        if let Some(wv) = v.weights.get(term) {
            dot += w * wv;
        }
    }
    let denom = u.norm() * v.norm();
    if denom == 0.0 {
        return 0.0;
    }
    (dot / denom).min(1.0)
}

/// Combined window vector on one side of a boundary.
///
/// The left window covers paragraphs `boundary, boundary-1, ...,
/// boundary-W+1`, the right window `boundary+1, ..., boundary+W`, both
/// clipped at the text edges. Each paragraph is reduced to its top-k terms
/// and scaled by the triangular weight `(W - d + 1) / W`, where `d = 1` for
/// the paragraph adjacent to the boundary.
pub fn window_vector(
    doc: &Document,
    boundary: usize,
    side: Side,
    cfg: &WindowConfig,
) -> Result<TermVector> {
    let n = doc.n();
    if boundary < 1 || boundary >= n {
        return Err(Error::BoundaryOutOfRange {
            boundary,
            max: n.saturating_sub(1),
        });
    }
    let w = cfg.window;
    let mut acc = TermVector::zero();
    for d in 1..=w {
        let index = match side {
            Side::Left => {
                if boundary + 1 < d + 1 {
                    continue; // clipped at the start of the text
                }
                boundary + 1 - d
            }
            Side::Right => {
                let idx = boundary + d;
                if idx > n {
                    continue; // clipped at the end of the text
                }
                idx
            }
        };
        let weight = (w - d + 1) as f64 / w as f64;
        acc.add_scaled(&top_k_terms(doc.paragraph(index), cfg.top_terms), weight);
    }
    Ok(acc)
}

/// Similarity curve over all internal boundaries:
/// `sim[b] = cosine(window(left, b), window(right, b))`.
pub fn similarity_curve(doc: &Document, cfg: &WindowConfig) -> Result<SimilarityCurve> {
    let n = doc.n();
    if n < 2 {
        return Err(Error::TooFewParagraphs { n });
    }
    let mut values = Vec::with_capacity(n - 1);
    for b in 1..n {
        let left = window_vector(doc, b, Side::Left, cfg)?;
        let right = window_vector(doc, b, Side::Right, cfg)?;
        values.push(cosine(&left, &right));
    }
    Ok(SimilarityCurve { values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn paragraph(index: usize, counts: &[(&str, u32)]) -> Paragraph {
        let terms: BTreeMap<String, u32> =
            counts.iter().map(|(t, c)| (t.to_string(), *c)).collect();
        Paragraph {
            index,
            length: counts.iter().map(|(_, c)| *c as usize).sum::<usize>().max(1),
            terms,
        }
    }

    fn doc(paragraphs: &[&[(&str, u32)]]) -> Document {
        Document::from_paragraphs(
            paragraphs
                .iter()
                .enumerate()
                .map(|(i, counts)| paragraph(i + 1, counts))
                .collect(),
        )
        .unwrap()
    }

    fn vector(weights: &[(&str, f64)]) -> TermVector {
        TermVector::from_weights(weights.iter().map(|(t, w)| (t.to_string(), *w))).unwrap()
    }

    #[test]
    fn top_k_selects_highest_frequencies() {
        let p = paragraph(1, &[("a", 5), ("b", 3), ("c", 1)]);
        assert_eq!(top_k_terms(&p, 2), vector(&[("a", 5.0), ("b", 3.0)]));
    }

    #[test]
    fn top_k_breaks_ties_lexicographically() {
        let p = paragraph(1, &[("a", 2), ("b", 2), ("c", 2)]);
        assert_eq!(top_k_terms(&p, 2), vector(&[("a", 2.0), ("b", 2.0)]));
    }

    #[test]
    fn top_k_with_fewer_terms_than_k() {
        let p = paragraph(1, &[("a", 1)]);
        assert_eq!(top_k_terms(&p, 50), vector(&[("a", 1.0)]));
        let empty = paragraph(1, &[]);
        assert!(top_k_terms(&empty, 50).is_zero());
    }

    #[test]
    fn cosine_identity_orthogonality_and_hand_value() {
        let u = vector(&[("a", 1.0), ("b", 1.0)]);
        assert!((cosine(&u, &u) - 1.0).abs() < 1e-12);
        let v = vector(&[("c", 2.0)]);
        assert_eq!(cosine(&u, &v), 0.0);
        let w = vector(&[("a", 1.0)]);
        assert!((cosine(&u, &w) - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert_eq!(cosine(&TermVector::zero(), &u), 0.0);
    }

    #[test]
    fn window_w1_is_the_adjacent_paragraph() {
        let d = doc(&[&[("a", 2), ("b", 1)], &[("c", 4)]]);
        let cfg = WindowConfig::new(50, 1).unwrap();
        assert_eq!(
            window_vector(&d, 1, Side::Left, &cfg).unwrap(),
            vector(&[("a", 2.0), ("b", 1.0)])
        );
        assert_eq!(
            window_vector(&d, 1, Side::Right, &cfg).unwrap(),
            vector(&[("c", 4.0)])
        );
    }

    #[test]
    fn window_clips_at_text_edges() {
        let d = doc(&[&[("a", 1)], &[("b", 1)], &[("c", 1)]]);
        let cfg = WindowConfig::new(50, 2).unwrap();
        // Left window at boundary 1 has only paragraph 1, weight 1.0.
        assert_eq!(
            window_vector(&d, 1, Side::Left, &cfg).unwrap(),
            vector(&[("a", 1.0)])
        );
        // Right window at boundary 2 has only paragraph 3, weight 1.0.
        assert_eq!(
            window_vector(&d, 2, Side::Right, &cfg).unwrap(),
            vector(&[("c", 1.0)])
        );
    }

    #[test]
    fn triangular_weights_hand_value() {
        // W=2: paragraph at d=1 has weight 1.0, at d=2 weight 0.5.
        let d = doc(&[&[("a", 2)], &[("a", 4)], &[("x", 1)]]);
        let cfg = WindowConfig::new(50, 2).unwrap();
        let left = window_vector(&d, 2, Side::Left, &cfg).unwrap();
        assert_eq!(left, vector(&[("a", 4.0 * 1.0 + 2.0 * 0.5)]));
        assert_eq!(left.weight("a"), 5.0);
    }

    #[test]
    fn curve_of_identical_paragraphs_is_one() {
        let terms: &[(&str, u32)] = &[("a", 3), ("b", 1)];
        let d = doc(&[terms, terms, terms, terms]);
        for w in [1, 2, 3] {
            let cfg = WindowConfig::new(50, w).unwrap();
            let curve = similarity_curve(&d, &cfg).unwrap();
            assert_eq!(curve.len(), 3);
            for &v in curve.values() {
                assert!((v - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn curve_of_disjoint_paragraphs_is_zero() {
        let d = doc(&[&[("a", 1)], &[("b", 1)]]);
        let cfg = WindowConfig::new(50, 1).unwrap();
        let curve = similarity_curve(&d, &cfg).unwrap();
        assert_eq!(curve.values(), &[0.0]);
    }

    #[test]
    fn single_paragraph_has_no_curve() {
        let d = doc(&[&[("a", 1)]]);
        assert_eq!(
            similarity_curve(&d, &WindowConfig::default()),
            Err(Error::TooFewParagraphs { n: 1 })
        );
    }

    #[test]
    fn boundary_out_of_range_is_rejected() {
        let d = doc(&[&[("a", 1)], &[("b", 1)]]);
        let cfg = WindowConfig::default();
        assert!(window_vector(&d, 0, Side::Left, &cfg).is_err());
        assert!(window_vector(&d, 2, Side::Left, &cfg).is_err());
    }

    #[test]
    fn wider_window_smooths_the_fixture_curve() {
        // Three-paragraph fixture: a short interrupting middle paragraph.
        // The W=2 curve must have variance <= the W=1 curve.
        let raw = include_str!("../tests/fixtures/smoothing.txt");
        let docp = crate::corpus::preprocess(raw, &crate::corpus::PreprocessConfig::smart())
            .unwrap();
        assert_eq!(docp.n(), 3);
        let narrow = similarity_curve(&docp, &WindowConfig::new(50, 1).unwrap()).unwrap();
        let wide = similarity_curve(&docp, &WindowConfig::new(50, 2).unwrap()).unwrap();
        let variance = |c: &SimilarityCurve| {
            let mean = c.values().iter().sum::<f64>() / c.len() as f64;
            c.values().iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / c.len() as f64
        };
        assert!(
            variance(&wide) <= variance(&narrow),
            "wide {} narrow {}",
            variance(&wide),
            variance(&narrow)
        );
    }

    #[test]
    fn csv_export_format() {
        let curve = SimilarityCurve::new(vec![0.5, 0.25]);
        assert_eq!(
            curve.to_csv(),
            "boundary,similarity\n1,0.500000\n2,0.250000\n"
        );
    }
}
