//! Parametric fragment-length cost functions.
//!
//! Both families reach their unique zero at the preferred fragment length
//! `p` and grow as the actual length moves away from it. The scaling factor
//! `h` trades length control against the similarity terms: the smaller `h`,
//! the less a fragment is punished for its size.

use crate::error::{Error, Result};

/// Shape of the fragment-length penalty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CostFamily {
    /// Second-degree cost `h * (x/p - 1)^2`.
    Parabola,
    /// V-shaped cost `|h * (x/p - 1)|`.
    Linear,
}

impl CostFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            CostFamily::Parabola => "parabola",
            CostFamily::Linear => "linear",
        }
    }
}

impl std::fmt::Display for CostFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for CostFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "parabola" => Ok(CostFamily::Parabola),
            "linear" => Ok(CostFamily::Linear),
            other => Err(Error::InvalidInput(format!(
                "unknown cost family `{other}` (expected `parabola` or `linear`)"
            ))),
        }
    }
}

/// Fragment-length cost specification: family, preferred length `p`, scale `h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostSpec {
    pub family: CostFamily,
    /// Preferred fragment length in words (`p`).
    pub preferred: u32,
    /// Scaling factor (`h`).
    pub scale: f64,
}

impl CostSpec {
    pub fn new(family: CostFamily, preferred: u32, scale: f64) -> Result<Self> {
        let spec = CostSpec {
            family,
            preferred,
            scale,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.preferred < 1 {
            return Err(Error::InvalidInput(
                "preferred fragment length must be >= 1".into(),
            ));
        }
        if !(self.scale > 0.0) || !self.scale.is_finite() {
            return Err(Error::InvalidInput(format!(
                "scale must be a finite positive number, got {}",
                self.scale
            )));
        }
        Ok(())
    }

    /// Cost of a fragment of `x` words.
    ///
    /// `x` is real-valued so the function can be probed at arbitrary points;
    /// actual fragment lengths are integral.
    pub fn length_cost(&self, x: f64) -> f64 {
        let p = f64::from(self.preferred);
        let deviation = x / p - 1.0;
        match self.family {
            CostFamily::Parabola => self.scale * deviation * deviation,
            CostFamily::Linear => (self.scale * deviation).abs(),
        }
    }
}

/// Free-function form of [`CostSpec::length_cost`].
pub fn length_cost(x: f64, spec: &CostSpec) -> f64 {
    spec.length_cost(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: CostFamily, p: u32, h: f64) -> CostSpec {
        CostSpec::new(family, p, h).unwrap()
    }

    #[test]
    fn zero_exactly_at_preferred_length() {
        for family in [CostFamily::Parabola, CostFamily::Linear] {
            for p in [1u32, 300, 600, 1000] {
                for h in [0.25, 0.5, 1.0, 1.5] {
                    assert_eq!(spec(family, p, h).length_cost(f64::from(p)), 0.0);
                }
            }
        }
    }

    #[test]
    fn hand_computed_values() {
        // 0.5 * (300/600 - 1)^2 = 0.125
        assert_eq!(spec(CostFamily::Parabola, 600, 0.5).length_cost(300.0), 0.125);
        // |1.0 * (900/600 - 1)| = 0.5
        assert_eq!(spec(CostFamily::Linear, 600, 1.0).length_cost(900.0), 0.5);
    }

    #[test]
    fn value_at_zero_and_two_p() {
        for h in [0.25, 1.0, 1.5] {
            assert_eq!(spec(CostFamily::Parabola, 600, h).length_cost(0.0), h);
            assert_eq!(spec(CostFamily::Linear, 600, h).length_cost(1200.0), h);
        }
    }

    #[test]
    fn parabola_matches_expanded_polynomial() {
        // Same second-degree function written as h*(x^2/p^2 - 2x/p + 1).
        let s = spec(CostFamily::Parabola, 600, 0.75);
        let p = 600.0f64;
        for i in 0..=1000 {
            let x = i as f64 * 3.0;
            let expanded = 0.75 * (x * x / (p * p) - 2.0 * x / p + 1.0);
            assert!((s.length_cost(x) - expanded).abs() < 1e-12, "x={x}");
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(CostSpec::new(CostFamily::Linear, 0, 1.0).is_err());
        assert!(CostSpec::new(CostFamily::Linear, 600, 0.0).is_err());
        assert!(CostSpec::new(CostFamily::Linear, 600, -1.0).is_err());
        assert!(CostSpec::new(CostFamily::Linear, 600, f64::NAN).is_err());
    }

    #[test]
    fn family_round_trips_through_str() {
        for family in [CostFamily::Parabola, CostFamily::Linear] {
            assert_eq!(family.as_str().parse::<CostFamily>().unwrap(), family);
        }
        assert!("cubic".parse::<CostFamily>().is_err());
    }
}
