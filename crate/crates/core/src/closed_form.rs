//! Shared vocabulary for closed-form evaluators: named parameter records,
//! domain flags, and the grid-verification report both the decay and power
//! modules produce.

use crate::error::{Error, Result};
use crate::tol;

/// Named real parameters for a closed-form expression.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Params(Vec<(String, f64)>);

impl Params {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Builds a record from name/value pairs.
    pub fn from_pairs(pairs: &[(&str, f64)]) -> Self {
        Self(pairs.iter().map(|(n, v)| (n.to_string(), *v)).collect())
    }

    /// Adds or replaces one parameter (builder style).
    pub fn with(mut self, name: &str, value: f64) -> Self {
        self.set(name, value);
        self
    }

    pub fn set(&mut self, name: &str, value: f64) {
        if let Some(slot) = self.0.iter_mut().find(|(n, _)| n == name) {
            slot.1 = value;
        } else {
            self.0.push((name.to_string(), value));
        }
    }

    /// Looks a parameter up, failing with [`Error::MissingParam`].
    pub fn get(&self, name: &str) -> Result<f64> {
        self.0
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
            .ok_or_else(|| Error::MissingParam { name: name.into() })
    }

    pub fn pairs(&self) -> &[(String, f64)] {
        &self.0
    }
}

/// Whether a closed-form value was evaluated inside the parameter region
/// where the expression is known to agree with the numeric pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainFlag {
    InVerifiedDomain,
    OutsideVerifiedDomain,
}

/// A closed-form value together with its domain flag.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedFormValue {
    pub value: f64,
    pub domain: DomainFlag,
}

impl ClosedFormValue {
    pub fn verified(value: f64) -> Self {
        Self {
            value,
            domain: DomainFlag::InVerifiedDomain,
        }
    }

    pub fn flagged(value: f64) -> Self {
        Self {
            value,
            domain: DomainFlag::OutsideVerifiedDomain,
        }
    }
}

/// Result of sweeping one closed form against the numeric pipeline over a
/// parameter lattice.
///
/// Points flagged [`DomainFlag::OutsideVerifiedDomain`] never count as
/// failures; their worst deviation is kept separately as diagnostics.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    /// Formula name, e.g. `GAD_r`.
    pub formula: &'static str,
    /// Tolerance applied to in-domain points.
    pub tolerance: f64,
    /// Total lattice points visited.
    pub points_total: usize,
    /// Points inside the verified domain.
    pub points_in_domain: usize,
    /// In-domain points whose deviation exceeded `tolerance`.
    pub failures: usize,
    /// Worst in-domain deviation.
    pub max_dev_in_domain: f64,
    /// Worst deviation over flagged (outside-domain) points.
    pub max_dev_flagged: f64,
    /// Coordinates of the worst in-domain point.
    pub worst_point: Vec<(String, f64)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{:<14} points={:<5} in-domain={:<5} max-dev={:.3e} tol={:.1e}",
            self.formula,
            self.points_total,
            self.points_in_domain,
            self.max_dev_in_domain,
            self.tolerance,
        )?;
        if self.points_total > self.points_in_domain {
            write!(
                f,
                " flagged={} flagged-max-dev={:.3e}",
                self.points_total - self.points_in_domain,
                self.max_dev_flagged,
            )?;
        }
        write!(f, " {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Accumulates lattice points into a [`VerifyReport`].
pub(crate) struct ReportAccumulator {
    report: VerifyReport,
}

impl ReportAccumulator {
    pub fn new(formula: &'static str, tolerance: f64) -> Self {
        Self {
            report: VerifyReport {
                formula,
                tolerance,
                points_total: 0,
                points_in_domain: 0,
                failures: 0,
                max_dev_in_domain: 0.0,
                max_dev_flagged: 0.0,
                worst_point: Vec::new(),
            },
        }
    }

    pub fn record(&mut self, coords: &[(&str, f64)], closed: ClosedFormValue, numeric: f64) {
        let dev = (closed.value - numeric).abs();
        let r = &mut self.report;
        r.points_total += 1;
        match closed.domain {
            DomainFlag::InVerifiedDomain => {
                r.points_in_domain += 1;
                if dev > r.max_dev_in_domain {
                    r.max_dev_in_domain = dev;
                    r.worst_point = coords.iter().map(|(n, v)| (n.to_string(), *v)).collect();
                }
                if dev > r.tolerance {
                    r.failures += 1;
                }
            }
            DomainFlag::OutsideVerifiedDomain => {
                r.max_dev_flagged = r.max_dev_flagged.max(dev);
            }
        }
    }

    pub fn finish(self) -> VerifyReport {
        self.report
    }
}

/// `c · log₂(a)` with the `0·log 0 = 0` convention: arguments within
/// 1e-12 of zero contribute nothing (their coefficients vanish with them
/// in every catalog expression), and genuinely negative arguments are a
/// domain error.
pub(crate) fn xlg(coeff: f64, arg: f64) -> Result<f64> {
    if arg > tol::ENTROPY_CLAMP {
        Ok(coeff * arg.log2())
    } else if arg >= -tol::ENTROPY_CLAMP {
        Ok(0.0)
    } else {
        Err(Error::DomainError { arg })
    }
}

/// Evenly spaced lattice over `[0, 1]` with `n ≥ 2` points.
pub(crate) fn unit_grid(n: usize) -> Vec<f64> {
    (0..n).map(|i| i as f64 / (n - 1) as f64).collect()
}
