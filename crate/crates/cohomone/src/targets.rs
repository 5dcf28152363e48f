//! Rational-homotopy types targeted by the classification.
//!
//! A [`RationalTarget`] is one of the closed simply-connected rational types
//! whose cohomogeneity-one realizations the engine analyses:
//!
//! * `QP(k, n)` — cohomology a truncated polynomial ring on one generator of
//!   even degree `k`, height `n + 1` (so `CP^n` at `k = 2`, `HP^n` at
//!   `k = 4`, the Cayley plane at `(8, 2)`, even spheres at `n = 1`). Odd `k`
//!   is the rational odd sphere and only exists at `n = 1`. `n = 0` is the
//!   rational point, admitted because quotient spaces of fibrations
//!   degenerate to it.
//! * `S2xHP(n)` — the rational type of `S^2 x HP^n` (four-periodic rational
//!   cohomology on two generators).
//! * `S3xS3` — the product of two odd 3-spheres.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rht::GradedDims;

/// A classification target; see the module docs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RationalTarget {
    /// Singly generated rational cohomology: generator degree `k`, height
    /// `n + 1`.
    QP {
        /// Degree of the cohomology generator (`>= 1`).
        k: u32,
        /// Projective height: `x^{n+1} = 0`, `x^n != 0`.
        n: u32,
    },
    /// The rational type of `S^2 x HP^n`, `n >= 1`.
    S2xHP {
        /// Quaternionic height of the second factor.
        n: u32,
    },
    /// The rational type of `S^3 x S^3`.
    S3xS3,
}

impl RationalTarget {
    /// Builds a `QP(k, n)` target, validating the domain: `k >= 1`, and odd
    /// `k` forces `n <= 1` (an odd-degree generator squares to zero).
    pub fn qp(k: u32, n: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidInput(
                "QP generator degree must be at least 1".to_string(),
            ));
        }
        if k % 2 == 1 && n > 1 {
            return Err(Error::InvalidInput(format!(
                "QP({k},{n}): an odd-degree generator squares to zero, so n <= 1"
            )));
        }
        Ok(RationalTarget::QP { k, n })
    }

    /// Builds an `S2xHP(n)` target, `n >= 1`.
    pub fn s2hp(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput(
                "S2xHP(0) degenerates to S^2; use QP(2,1)".to_string(),
            ));
        }
        Ok(RationalTarget::S2xHP { n })
    }

    /// Formal (real) dimension.
    pub fn formal_dim(&self) -> u32 {
        match *self {
            RationalTarget::QP { k, n } => k * n,
            RationalTarget::S2xHP { n } => 4 * n + 2,
            RationalTarget::S3xS3 => 6,
        }
    }

    /// Euler characteristic.
    pub fn euler_char(&self) -> u32 {
        match *self {
            RationalTarget::QP { k, n } => {
                if k % 2 == 1 && n == 1 {
                    0 // odd sphere
                } else {
                    n + 1
                }
            }
            RationalTarget::S2xHP { n } => 2 * (n + 1),
            RationalTarget::S3xS3 => 0,
        }
    }

    /// Rational homotopy dimensions.
    pub fn rational_homotopy(&self) -> GradedDims {
        match *self {
            RationalTarget::QP { k, n } => {
                if n == 0 {
                    GradedDims::new()
                } else if k % 2 == 1 {
                    // odd sphere (n = 1)
                    GradedDims::from_pairs([(k, 1)])
                } else if n == 1 {
                    GradedDims::sphere(k)
                } else {
                    GradedDims::from_pairs([(k, 1), (k * (n + 1) - 1, 1)])
                }
            }
            RationalTarget::S2xHP { n } => {
                GradedDims::sphere(2).merged(&GradedDims::from_pairs([(4, 1), (4 * n + 3, 1)]))
            }
            RationalTarget::S3xS3 => GradedDims::from_pairs([(3, 2)]),
        }
    }

    /// True for the parameter pairs realized by the rank one symmetric
    /// spaces: any `n` at `k ∈ {2, 4}`, any `k` at `n <= 1`, and `(8, 2)`.
    pub fn is_standard(&self) -> bool {
        match *self {
            RationalTarget::QP { k, n } => standard_parameters(k, n),
            _ => false,
        }
    }

    /// True for the targets with four-periodic rational cohomology:
    /// `S3xS3`, every `S2xHP(n)`, and `QP(k, n)` with `k ∈ {2, 4}` or
    /// `n <= 1`.
    pub fn is_four_periodic(&self) -> bool {
        match *self {
            RationalTarget::QP { k, n } => k <= 4 || n <= 1,
            RationalTarget::S2xHP { .. } => true,
            RationalTarget::S3xS3 => true,
        }
    }

    /// The classical name of a standard `QP` target, when there is one:
    /// spheres at `n <= 1`, `CP^n`, `HP^n`, and the Cayley plane.
    pub fn classical_name(&self) -> Option<String> {
        match *self {
            RationalTarget::QP { k, n } => {
                if n == 0 {
                    Some("point".to_string())
                } else if n == 1 {
                    Some(format!("S^{k}"))
                } else if k == 2 {
                    Some(format!("CP^{n}"))
                } else if k == 4 {
                    Some(format!("HP^{n}"))
                } else if k == 8 && n == 2 {
                    Some("OP^2".to_string())
                } else {
                    None
                }
            }
            _ => None,
        }
    }
}

/// `QP(k, n)` parameters realized by rank one symmetric spaces: `n <= 1`
/// (spheres and the point), `k ∈ {2, 4}` (complex and quaternionic projective
/// spaces), or `(k, n) = (8, 2)` (the Cayley plane).
pub fn standard_parameters(k: u32, n: u32) -> bool {
    n <= 1 || k == 2 || k == 4 || (k == 8 && n == 2)
}

impl fmt::Display for RationalTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RationalTarget::QP { k, n } => write!(f, "QP({k},{n})"),
            RationalTarget::S2xHP { n } => write!(f, "S2xHP({n})"),
            RationalTarget::S3xS3 => write!(f, "S3xS3"),
        }
    }
}

impl FromStr for RationalTarget {
    type Err = Error;

    /// Parses `QP(k,n)`, `S2xHP(n)`, or `S3xS3` (whitespace inside the
    /// parentheses is tolerated).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "S3xS3" {
            return Ok(RationalTarget::S3xS3);
        }
        let parse_args = |inner: &str| -> Result<Vec<u32>> {
            inner
                .split(',')
                .map(|p| {
                    p.trim().parse::<u32>().map_err(|_| {
                        Error::ParseTarget(format!("bad number {:?} in {s:?}", p.trim()))
                    })
                })
                .collect()
        };
        if let Some(rest) = s.strip_prefix("QP(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::ParseTarget(format!("missing ')' in {s:?}")))?;
            let args = parse_args(inner)?;
            if args.len() != 2 {
                return Err(Error::ParseTarget(format!(
                    "QP takes two arguments, got {} in {s:?}",
                    args.len()
                )));
            }
            return RationalTarget::qp(args[0], args[1]).map_err(|e| match e {
                Error::InvalidInput(m) => Error::ParseTarget(m),
                other => other,
            });
        }
        if let Some(rest) = s.strip_prefix("S2xHP(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::ParseTarget(format!("missing ')' in {s:?}")))?;
            let args = parse_args(inner)?;
            if args.len() != 1 {
                return Err(Error::ParseTarget(format!(
                    "S2xHP takes one argument, got {} in {s:?}",
                    args.len()
                )));
            }
            return RationalTarget::s2hp(args[0]).map_err(|e| match e {
                Error::InvalidInput(m) => Error::ParseTarget(m),
                other => other,
            });
        }
        Err(Error::ParseTarget(format!("unrecognized target {s:?}")))
    }
}
