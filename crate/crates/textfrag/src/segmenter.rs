//! Optimal fragment boundary detection by dynamic programming.
//!
//! For each paragraph `par` the recurrence considers every possible start
//! `i` of the fragment that ends at `par`; the candidate cost is the length
//! cost of that fragment plus the accumulated cost and boundary similarity
//! at the preceding boundary `i-1`. Backtracking the argmins from the last
//! paragraph yields the boundary set with globally minimal total cost
//!
//! ```text
//! total(B) = sum over fragments of c_len(fragment length)
//!          + sum over b in B of sim[b]
//! ```

use crate::cohesion::SimilarityCurve;
use crate::costs::CostSpec;
use crate::error::{Error, Result};

/// Inner-loop pruning strategy.
///
/// `Safe` stops scanning fragment starts once the running fragment is at
/// least `p` words long *and* its length cost alone already exceeds the
/// best candidate: past `p` both cost families increase monotonically, so
/// no longer fragment can win. `Verbatim` drops the length guard and breaks
/// whenever the length cost exceeds the best candidate. `Off` scans every
/// start.
///
/// With non-negative similarities the length guard is provably redundant —
/// below `p` the length cost of a growing fragment only falls, so it can
/// never exceed a candidate total recorded earlier in the same scan — but
/// `Safe` keeps the explicit guard and `Verbatim` exists to demonstrate the
/// equivalence against the brute-force oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PruningMode {
    Safe,
    Verbatim,
    Off,
}

impl std::str::FromStr for PruningMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "safe" => Ok(PruningMode::Safe),
            "verbatim" => Ok(PruningMode::Verbatim),
            "off" => Ok(PruningMode::Off),
            other => Err(Error::InvalidInput(format!(
                "unknown pruning mode `{other}` (expected `safe`, `verbatim` or `off`)"
            ))),
        }
    }
}

/// Everything the segmenter needs: paragraph word counts, the boundary
/// similarity curve and the length-cost specification.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentInput {
    lengths: Vec<u64>,
    curve: SimilarityCurve,
    spec: CostSpec,
}

impl SegmentInput {
    pub fn new(lengths: Vec<u64>, curve: SimilarityCurve, spec: CostSpec) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::InvalidInput("lengths must be non-empty".into()));
        }
        if lengths.iter().any(|&l| l == 0) {
            return Err(Error::InvalidInput(
                "paragraph lengths must be positive".into(),
            ));
        }
        if curve.len() != lengths.len() - 1 {
            return Err(Error::InvalidInput(format!(
                "curve has {} values for {} paragraphs (need n-1 = {})",
                curve.len(),
                lengths.len(),
                lengths.len() - 1
            )));
        }
        if curve.values().iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput(
                "similarities must be finite".into(),
            ));
        }
        spec.validate()?;
        Ok(SegmentInput {
            lengths,
            curve,
            spec,
        })
    }

    pub fn n(&self) -> usize {
        self.lengths.len()
    }

    pub fn lengths(&self) -> &[u64] {
        &self.lengths
    }

    pub fn curve(&self) -> &SimilarityCurve {
        &self.curve
    }

    pub fn spec(&self) -> &CostSpec {
        &self.spec
    }

    /// `sim[b]` with the Fig-style convention `sim[0] = 0` for the text
    /// start.
    fn sim(&self, b: usize) -> f64 {
        if b == 0 {
            0.0
        } else {
            self.curve.sim(b)
        }
    }
}

/// Accumulated DP state: `cost[0..=n]` minimal prefix costs (`cost[0] = 0`)
/// and `link_prev[1..=n]` argmin predecessor boundaries.
#[derive(Debug, Clone, PartialEq)]
pub struct DpState {
    pub cost: Vec<f64>,
    pub link_prev: Vec<usize>,
}

/// A chosen set of fragment boundaries with its objective value.
#[derive(Debug, Clone, PartialEq)]
pub struct Segmentation {
    /// Strictly increasing boundary indices, each in `1..=n-1`. Empty means
    /// the whole text is a single fragment.
    pub boundaries: Vec<usize>,
    pub total_cost: f64,
}

/// Run the dynamic program and backtrack the optimal boundary set.
///
/// Ties are broken by strict less-than, so among equal-cost candidates the
/// first one evaluated — the one with the shortest final fragment — wins.
/// Negative similarities are accepted only with pruning off; the pruning
/// bound needs non-negative similarity terms.
pub fn segment(input: &SegmentInput, pruning: PruningMode) -> Result<Segmentation> {
    segment_with_state(input, pruning).map(|(seg, _)| seg)
}

/// Like [`segment`], also returning the DP table for inspection.
pub fn segment_with_state(
    input: &SegmentInput,
    pruning: PruningMode,
) -> Result<(Segmentation, DpState)> {
    if pruning != PruningMode::Off && input.curve.values().iter().any(|&v| v < 0.0) {
        return Err(Error::InvalidInput(
            "negative similarities require pruning to be off".into(),
        ));
    }
    let n = input.n();
    let preferred = u64::from(input.spec.preferred);

    let mut cost = vec![0.0f64; n + 1];
    let mut link_prev = vec![0usize; n + 1];

    for par in 1..=n {
        let mut len_sum = 0u64;
        let mut c_min = f64::INFINITY;
        let mut loc_c_min = par - 1;
        for i in (1..=par).rev() {
            len_sum += input.lengths[i - 1];
            let c_len = input.spec.length_cost(len_sum as f64);
            let prune = match pruning {
                PruningMode::Safe => len_sum >= preferred && c_len > c_min,
                PruningMode::Verbatim => c_len > c_min,
                PruningMode::Off => false,
            };
            if prune {
                break;
            }
            let c = c_len + cost[i - 1] + input.sim(i - 1);
            if c < c_min {
                c_min = c;
                loc_c_min = i - 1;
            }
        }
        cost[par] = c_min;
        link_prev[par] = loc_c_min;
    }

    let mut boundaries = Vec::new();
    let mut j = n;
    while link_prev[j] > 0 {
        boundaries.push(link_prev[j]);
        j = link_prev[j];
    }
    boundaries.reverse();

    let segmentation = Segmentation {
        boundaries,
        total_cost: cost[n],
    };
    Ok((segmentation, DpState { cost, link_prev }))
}

/// Objective value of an arbitrary boundary set: the sum of length costs
/// over the induced fragments plus the similarities of the chosen
/// boundaries.
pub fn total_cost(boundaries: &[usize], input: &SegmentInput) -> Result<f64> {
    let n = input.n();
    for (pos, &b) in boundaries.iter().enumerate() {
        if b < 1 || b >= n {
            return Err(Error::InvalidBoundary {
                boundary: b,
                max: n.saturating_sub(1),
            });
        }
        if pos > 0 && boundaries[pos - 1] >= b {
            return Err(Error::InvalidInput(format!(
                "boundaries must be strictly increasing, got {} after {}",
                b,
                boundaries[pos - 1]
            )));
        }
    }
    let mut total = 0.0;
    let mut prev = 0usize;
    for &b in boundaries.iter().chain(std::iter::once(&n)) {
        let fragment: u64 = input.lengths[prev..b].iter().sum();
        total += input.spec.length_cost(fragment as f64);
        if b < n {
            total += input.sim(b);
        }
        prev = b;
    }
    Ok(total)
}
