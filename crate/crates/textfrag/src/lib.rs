//! Lexical-cohesion text fragmentation.
//!
//! Splits a plain-text document into *fragments* (microdocuments): contiguous
//! runs of paragraphs that are reasonably self-contained and close to a
//! preferred length. The pipeline:
//!
//! 1. [`corpus`] — paragraph splitting, tokenization, stopword removal,
//!    stemming and term-frequency counting;
//! 2. [`cohesion`] — per-paragraph top-k term vectors and a distance-weighted
//!    sliding-window cosine similarity for every paragraph boundary;
//! 3. [`costs`] — parametric fragment-length penalties (parabola and V-shaped
//!    linear) with preferred length `p` and scale `h`;
//! 4. [`segmenter`] — dynamic programming over boundaries, returning the
//!    segmentation that globally minimizes length cost plus boundary
//!    similarity;
//! 5. [`evaluation`] — an exhaustive brute-force oracle certifying the DP's
//!    optimality, plus fragment-length statistics.
//!
//! ```
//! use textfrag::{preprocess, similarity_curve, segment};
//! use textfrag::{CostFamily, CostSpec, PreprocessConfig, PruningMode, SegmentInput, WindowConfig};
//!
//! let text = "The red planet shows a thin atmosphere.\n\n\
//!             Atmosphere and water vapour were long debated.\n\n\
//!             The canals were drawn from telescopic sketches.\n\n\
//!             Telescopes of the era strained to resolve the disk.";
//! let doc = preprocess(text, &PreprocessConfig::default())?;
//! let curve = similarity_curve(&doc, &WindowConfig::default())?;
//! let input = SegmentInput::new(
//!     doc.lengths(),
//!     curve,
//!     CostSpec::new(CostFamily::Parabola, 12, 1.0)?,
//! )?;
//! let segmentation = segment(&input, PruningMode::Safe)?;
//! assert!(segmentation.total_cost >= 0.0);
//! # Ok::<(), textfrag::Error>(())
//! ```

pub mod cohesion;
pub mod corpus;
pub mod costs;
mod error;
pub mod evaluation;
pub mod porter;
pub mod segmenter;

pub use cohesion::{cosine, similarity_curve, window_vector, Side, SimilarityCurve, TermVector, WindowConfig};
pub use corpus::{
    parse_stopword_list, preprocess, split_paragraphs, tokenize, Document, Paragraph,
    PreprocessConfig,
};
pub use costs::{length_cost, CostFamily, CostSpec};
pub use error::{Error, Result};
pub use evaluation::{brute_force_segment, fragment_lengths, length_stats, FragmentStats};
pub use segmenter::{segment, total_cost, PruningMode, SegmentInput, Segmentation};
