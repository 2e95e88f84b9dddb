use crate::error::{Error, Result};

use super::complex::BigComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Acceleration {
    None,
    #[default]
    EulerTransform,
}

/// Working precision and truncation policy for every numerical evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct PrecisionContext {
    precision_bits: u32,
    truncation_m: u64,
    target_tol: f64,
    acceleration: Acceleration,
}

impl PrecisionContext {
    pub fn new(
        precision_bits: u32,
        truncation_m: u64,
        target_tol: f64,
        acceleration: Acceleration,
    ) -> Result<Self> {
        if precision_bits < 24 {
            return Err(Error::Precision(format!(
                "precision_bits must be at least 24, got {precision_bits}"
            )));
        }
        if truncation_m == 0 {
            return Err(Error::Precision("truncation_M must be positive".into()));
        }
        let floor = (8.0 - f64::from(precision_bits)).exp2();
        if !(target_tol.is_finite() && target_tol > floor) {
            return Err(Error::Precision(format!(
                "target_tol {target_tol:e} must exceed 2^(8-{precision_bits}) = {floor:e}"
            )));
        }
        Ok(PrecisionContext {
            precision_bits,
            truncation_m,
            target_tol,
            acceleration,
        })
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    pub fn truncation_m(&self) -> u64 {
        self.truncation_m
    }

    pub fn target_tol(&self) -> f64 {
        self.target_tol
    }

    pub fn acceleration(&self) -> Acceleration {
        self.acceleration
    }

    pub fn with_target_tol(&self, tol: f64) -> Result<Self> {
        PrecisionContext::new(self.precision_bits, self.truncation_m, tol, self.acceleration)
    }

    pub fn with_truncation(&self, m: u64) -> Result<Self> {
        PrecisionContext::new(self.precision_bits, m, self.target_tol, self.acceleration)
    }

    pub fn with_acceleration(&self, acc: Acceleration) -> Self {
        PrecisionContext {
            acceleration: acc,
            ..self.clone()
        }
    }

    /// Unit roundoff `2^-precision_bits`.
    pub(crate) fn eps(&self) -> f64 {
        (-f64::from(self.precision_bits)).exp2()
    }

    /// The same context with the tolerance divided by `factor`, clamped just
    /// above the precision floor.
    pub(crate) fn tightened(&self, factor: f64) -> Self {
        let floor = 2.0 * (8.0 - f64::from(self.precision_bits)).exp2();
        let tol = (self.target_tol / factor.max(1.0)).max(floor);
        PrecisionContext {
            target_tol: tol.min(self.target_tol),
            ..self.clone()
        }
    }

    pub(crate) fn zero(&self) -> BigComplex {
        BigComplex::zero(self.precision_bits)
    }

    pub(crate) fn one(&self) -> BigComplex {
        BigComplex::one(self.precision_bits)
    }
}

impl Default for PrecisionContext {
    /// 128 bits, `M = 10^6`, tolerance `1e-10`, Euler transform enabled.
    fn default() -> Self {
        PrecisionContext::new(128, 1_000_000, 1e-10, Acceleration::EulerTransform)
            .expect("valid defaults")
    }
}

/// A value together with an estimate of its absolute error and the number of
/// series terms that went into it.
#[derive(Clone, Debug, PartialEq)]
pub struct Estimate {
    pub value: BigComplex,
    pub error: f64,
    pub terms: u64,
}

impl Estimate {
    pub fn exact(value: BigComplex) -> Self {
        Estimate {
            value,
            error: 0.0,
            terms: 0,
        }
    }

    pub fn add(&self, other: &Estimate) -> Estimate {
        Estimate {
            value: &self.value + &other.value,
            error: self.error + other.error,
            terms: self.terms + other.terms,
        }
    }

    pub fn sub(&self, other: &Estimate) -> Estimate {
        Estimate {
            value: &self.value - &other.value,
            error: self.error + other.error,
            terms: self.terms + other.terms,
        }
    }

    pub fn mul(&self, other: &Estimate) -> Estimate {
        let a = self.value.abs_f64();
        let b = other.value.abs_f64();
        Estimate {
            value: &self.value * &other.value,
            error: a * other.error + b * self.error + self.error * other.error,
            terms: self.terms + other.terms,
        }
    }

    /// Multiplies by an exact scalar.
    pub fn scale(&self, c: &BigComplex) -> Estimate {
        Estimate {
            value: &self.value * c,
            error: self.error * c.abs_f64(),
            terms: self.terms,
        }
    }

    pub fn neg(&self) -> Estimate {
        Estimate {
            value: -&self.value,
            error: self.error,
            terms: self.terms,
        }
    }
}
