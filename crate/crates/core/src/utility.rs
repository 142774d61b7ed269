//! Marginal-utility families: evaluation of u', u'', u''', inverse marginal
//! utility, absolute risk tolerance, and the affine-tolerance (HARA) fit.
//!
//! Utility *levels* are never needed by any solver in this crate, so only the
//! marginal utility and its first two derivatives are represented. Every
//! family keeps a half-line (or full-line) domain on which u' > 0 and
//! u'' < 0 hold.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootfind::{self, Eval};
use crate::scalar::Real;

/// Serializable family descriptor, the JSON-facing construction recipe.
///
/// `scale` is the multiplicative constant on u'; it does not affect any
/// ordering and defaults to 1, but is stored for round-trip fidelity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum UtilitySpec<T> {
    /// u'(x) = x^(-gamma) on (0, inf).
    Crra { gamma: T },
    /// u'(x) = exp(-alpha x) on the whole real line.
    Cara { alpha: T },
    /// u'(x) = scale (a x + b)^(-1/a) on {x : a x + b > 0}, a > -1, a != 0.
    Hara {
        a: T,
        b: T,
        #[serde(default = "default_scale")]
        scale: T,
    },
    /// Affine marginal u'(x) = scale (bliss - x) on (-inf, bliss); u''' = 0.
    Quadratic {
        bliss: T,
        #[serde(default = "default_scale")]
        scale: T,
    },
    /// u'(x) = sum_i w_i x^(-gamma_i) on (0, inf); non-HARA whenever the
    /// exponents are distinct.
    Mixture { weights: Vec<T>, exponents: Vec<T> },
}

fn default_scale<T: Real>() -> T {
    T::one()
}

/// Marginal-utility callbacks for families not built into this crate.
///
/// All three derivatives must be supplied; no automatic differentiation is
/// attempted.
#[derive(Clone)]
pub struct CustomMarginal<T> {
    pub u_prime: Arc<dyn Fn(T) -> T + Send + Sync>,
    pub u_second: Arc<dyn Fn(T) -> T + Send + Sync>,
    pub u_third: Arc<dyn Fn(T) -> T + Send + Sync>,
    pub domain_low: T,
    pub domain_high: T,
}

impl<T: Real> fmt::Debug for CustomMarginal<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomMarginal")
            .field("domain_low", &self.domain_low)
            .field("domain_high", &self.domain_high)
            .finish_non_exhaustive()
    }
}

#[derive(Clone, Debug)]
enum Family<T> {
    Crra { gamma: T },
    Cara { alpha: T },
    Hara { a: T, b: T, scale: T },
    Quadratic { bliss: T, scale: T },
    Mixture { weights: Vec<T>, exponents: Vec<T> },
    Custom(CustomMarginal<T>),
}

/// A thrice-differentiable marginal-utility object on an open interval.
///
/// Immutable after construction; all evaluations are pure.
#[derive(Clone, Debug)]
pub struct UtilityFunction<T> {
    family: Family<T>,
    domain_low: T,
    domain_high: T,
}

/// Result of the affine least-squares fit of absolute risk tolerance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HaraFit<T> {
    /// max_i |T(x_i) - (a x_i + b)| over the fitting grid.
    pub residual: T,
    /// Fitted tolerance slope.
    pub a: T,
    /// Fitted tolerance intercept.
    pub b: T,
}

/// Default classification threshold: residuals at or below this are treated
/// as exactly affine tolerance on unit-scale grids.
pub const HARA_TOL: f64 = 1e-8;

/// Build a [`UtilityFunction`] from a family descriptor, validating the
/// family's parameter constraints.
pub fn make_utility<T: Real>(spec: &UtilitySpec<T>) -> Result<UtilityFunction<T>> {
    match spec {
        UtilitySpec::Crra { gamma } => UtilityFunction::crra(*gamma),
        UtilitySpec::Cara { alpha } => UtilityFunction::cara(*alpha),
        UtilitySpec::Hara { a, b, scale } => UtilityFunction::hara(*a, *b, *scale),
        UtilitySpec::Quadratic { bliss, scale } => UtilityFunction::quadratic(*bliss, *scale),
        UtilitySpec::Mixture { weights, exponents } => {
            UtilityFunction::crra_mixture(weights.clone(), exponents.clone())
        }
    }
}

impl<T: Real> UtilityFunction<T> {
    pub fn crra(gamma: T) -> Result<Self> {
        if !(gamma > T::zero()) || !gamma.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "crra requires gamma > 0, got {gamma}"
            )));
        }
        Ok(Self {
            family: Family::Crra { gamma },
            domain_low: T::zero(),
            domain_high: T::infinity(),
        })
    }

    pub fn cara(alpha: T) -> Result<Self> {
        if !(alpha > T::zero()) || !alpha.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "cara requires alpha > 0, got {alpha}"
            )));
        }
        Ok(Self {
            family: Family::Cara { alpha },
            domain_low: T::neg_infinity(),
            domain_high: T::infinity(),
        })
    }

    /// HARA marginal u'(x) = scale (a x + b)^(-1/a).
    ///
    /// `a > 0` gives the half-line (-b/a, inf); `-1 < a < 0` gives
    /// (-inf, -b/a). `a = 0` is CARA and `a = -1` the affine (quadratic)
    /// boundary; both are rejected here in favor of their own constructors.
    pub fn hara(a: T, b: T, scale: T) -> Result<Self> {
        if !(a > -T::one()) || !a.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "hara requires a > -1, got {a}"
            )));
        }
        if a == T::zero() {
            return Err(Error::InvalidParameter(
                "hara with a = 0 is CARA; use the cara family".into(),
            ));
        }
        if !(scale > T::zero()) {
            return Err(Error::InvalidParameter(format!(
                "hara requires scale > 0, got {scale}"
            )));
        }
        if !b.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "hara requires finite b, got {b}"
            )));
        }
        let knee = -b / a;
        let (domain_low, domain_high) = if a > T::zero() {
            (knee, T::infinity())
        } else {
            (T::neg_infinity(), knee)
        };
        Ok(Self {
            family: Family::Hara { a, b, scale },
            domain_low,
            domain_high,
        })
    }

    /// Quadratic utility: affine marginal u'(x) = scale (bliss - x), so
    /// u''' vanishes identically. Valid for x < bliss.
    pub fn quadratic(bliss: T, scale: T) -> Result<Self> {
        if !(scale > T::zero()) {
            return Err(Error::InvalidParameter(format!(
                "quadratic requires scale > 0, got {scale}"
            )));
        }
        if !bliss.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "quadratic requires finite bliss, got {bliss}"
            )));
        }
        Ok(Self {
            family: Family::Quadratic { bliss, scale },
            domain_low: T::neg_infinity(),
            domain_high: bliss,
        })
    }

    /// Mixture of CRRA marginals: u'(x) = sum_i w_i x^(-gamma_i).
    pub fn crra_mixture(weights: Vec<T>, exponents: Vec<T>) -> Result<Self> {
        if weights.is_empty() || weights.len() != exponents.len() {
            return Err(Error::InvalidParameter(
                "mixture requires equally many weights and exponents (>= 1)".into(),
            ));
        }
        if weights.iter().any(|w| !(*w > T::zero())) {
            return Err(Error::InvalidParameter(
                "mixture weights must be strictly positive".into(),
            ));
        }
        if exponents.iter().any(|g| !(*g > T::zero()) || !g.is_finite()) {
            return Err(Error::InvalidParameter(
                "mixture exponents must be strictly positive".into(),
            ));
        }
        for i in 0..exponents.len() {
            for j in (i + 1)..exponents.len() {
                if exponents[i] == exponents[j] {
                    return Err(Error::InvalidParameter(format!(
                        "mixture exponents must be distinct; exponent {} repeats",
                        exponents[i]
                    )));
                }
            }
        }
        Ok(Self {
            family: Family::Mixture { weights, exponents },
            domain_low: T::zero(),
            domain_high: T::infinity(),
        })
    }

    /// Wrap caller-supplied marginal-utility callbacks.
    pub fn custom(marginal: CustomMarginal<T>) -> Result<Self> {
        if !(marginal.domain_low < marginal.domain_high) {
            return Err(Error::InvalidParameter(
                "custom marginal requires domain_low < domain_high".into(),
            ));
        }
        let (domain_low, domain_high) = (marginal.domain_low, marginal.domain_high);
        Ok(Self {
            family: Family::Custom(marginal),
            domain_low,
            domain_high,
        })
    }

    /// Open domain (low, high); `high` is `inf` for every built-in family
    /// except quadratic and the `-1 < a < 0` HARA branch.
    pub fn domain(&self) -> (T, T) {
        (self.domain_low, self.domain_high)
    }

    pub fn domain_low(&self) -> T {
        self.domain_low
    }

    pub fn contains(&self, x: T) -> bool {
        x > self.domain_low && x < self.domain_high && x.is_finite()
    }

    pub fn family_name(&self) -> &'static str {
        match &self.family {
            Family::Crra { .. } => "crra",
            Family::Cara { .. } => "cara",
            Family::Hara { .. } => "hara",
            Family::Quadratic { .. } => "quadratic",
            Family::Mixture { .. } => "mixture",
            Family::Custom(_) => "custom",
        }
    }

    /// Marginal utility u'(x). Caller keeps `x` inside [`Self::domain`].
    pub fn u_prime(&self, x: T) -> T {
        match &self.family {
            Family::Crra { gamma } => x.powf(-*gamma),
            // Evaluated through log space; see `log_u_prime`.
            Family::Cara { alpha } => (-*alpha * x).exp(),
            Family::Hara { a, b, scale } => *scale * (*a * x + *b).powf(-a.recip()),
            Family::Quadratic { bliss, scale } => *scale * (*bliss - x),
            Family::Mixture { weights, exponents } => weights
                .iter()
                .zip(exponents)
                .fold(T::zero(), |acc, (w, g)| acc + *w * x.powf(-*g)),
            Family::Custom(c) => (c.u_prime)(x),
        }
    }

    /// Second derivative u''(x) < 0.
    pub fn u_second(&self, x: T) -> T {
        match &self.family {
            Family::Crra { gamma } => -*gamma * x.powf(-*gamma - T::one()),
            Family::Cara { alpha } => -*alpha * (-*alpha * x).exp(),
            Family::Hara { a, b, scale } => {
                -*scale * (*a * x + *b).powf(-a.recip() - T::one())
            }
            Family::Quadratic { scale, .. } => -*scale,
            Family::Mixture { weights, exponents } => weights
                .iter()
                .zip(exponents)
                .fold(T::zero(), |acc, (w, g)| {
                    acc - *w * *g * x.powf(-*g - T::one())
                }),
            Family::Custom(c) => (c.u_second)(x),
        }
    }

    /// Third derivative u'''(x); > 0 for every family except quadratic,
    /// where it vanishes identically.
    pub fn u_third(&self, x: T) -> T {
        match &self.family {
            Family::Crra { gamma } => {
                *gamma * (*gamma + T::one()) * x.powf(-*gamma - T::of(2.0))
            }
            Family::Cara { alpha } => *alpha * *alpha * (-*alpha * x).exp(),
            Family::Hara { a, b, scale } => {
                *scale
                    * (T::one() + *a)
                    * (*a * x + *b).powf(-a.recip() - T::of(2.0))
            }
            Family::Quadratic { .. } => T::zero(),
            Family::Mixture { weights, exponents } => weights
                .iter()
                .zip(exponents)
                .fold(T::zero(), |acc, (w, g)| {
                    acc + *w * *g * (*g + T::one()) * x.powf(-*g - T::of(2.0))
                }),
            Family::Custom(c) => (c.u_third)(x),
        }
    }

    /// ln u'(x) in closed form where available; `None` for custom callbacks.
    ///
    /// CARA is defined by this quantity (log u' = -alpha x), which stays
    /// finite where u' itself would overflow.
    pub fn log_u_prime(&self, x: T) -> Option<T> {
        match &self.family {
            Family::Crra { gamma } => Some(-*gamma * x.ln()),
            Family::Cara { alpha } => Some(-*alpha * x),
            Family::Hara { a, b, scale } => {
                Some(scale.ln() - a.recip() * (*a * x + *b).ln())
            }
            Family::Quadratic { bliss, scale } => Some(scale.ln() + (*bliss - x).ln()),
            Family::Mixture { .. } => Some(self.u_prime(x).ln()),
            Family::Custom(_) => None,
        }
    }

    /// Inverse marginal utility: the x with u'(x) = m.
    ///
    /// Closed form for CRRA/CARA/HARA/quadratic; bracketed root-find with
    /// geometric bracket expansion for mixtures and custom callbacks.
    pub fn inverse_marginal(&self, m: T) -> Result<T> {
        if !(m > T::zero()) || !m.is_finite() {
            return Err(Error::OutOfRange {
                value: m.to_f64().unwrap_or(f64::NAN),
                context: "inverse_marginal requires m > 0",
            });
        }
        match &self.family {
            Family::Crra { gamma } => Ok(m.powf(-gamma.recip())),
            Family::Cara { alpha } => Ok(-m.ln() / *alpha),
            Family::Hara { a, b, scale } => Ok(((m / *scale).powf(-*a) - *b) / *a),
            Family::Quadratic { bliss, scale } => Ok(*bliss - m / *scale),
            Family::Mixture { .. } | Family::Custom(_) => self.invert_by_bracketing(m),
        }
    }

    fn invert_by_bracketing(&self, m: T) -> Result<T> {
        let two = T::of(2.0);
        // Seed strictly inside the domain.
        let mut seed = T::one();
        if !self.contains(seed) {
            seed = if self.domain_low.is_finite() && self.domain_high.is_finite() {
                (self.domain_low + self.domain_high) / two
            } else if self.domain_low.is_finite() {
                self.domain_low + T::one()
            } else {
                self.domain_high - T::one()
            };
        }

        // u' is strictly decreasing: walk lo down while u'(lo) < m, hi up
        // while u'(hi) > m.
        let mut lo = seed;
        let mut expand = T::one();
        for _ in 0..600 {
            if self.u_prime(lo) > m {
                break;
            }
            expand = expand * two;
            lo = if self.domain_low.is_finite() {
                self.domain_low + (lo - self.domain_low) / two
            } else {
                seed - expand
            };
        }
        let mut hi = seed;
        expand = T::one();
        for _ in 0..600 {
            if self.u_prime(hi) < m {
                break;
            }
            expand = expand * two;
            hi = if self.domain_high.is_finite() {
                self.domain_high - (self.domain_high - hi) / two
            } else {
                seed + expand
            };
        }
        if !(self.u_prime(lo) > m && self.u_prime(hi) < m) {
            return Err(Error::OutOfRange {
                value: m.to_f64().unwrap_or(f64::NAN),
                context: "bracket expansion failed: m outside the range of u'",
            });
        }
        rootfind::newton_bisect(
            |x| Eval {
                value: self.u_prime(x) - m,
                deriv: self.u_second(x),
                scale: m,
            },
            lo,
            hi,
            T::epsilon() * T::of(4.0) * (lo.abs() + hi.abs() + T::one()),
            T::epsilon() * T::of(8.0),
            200,
            "inverse marginal utility",
        )
    }

    /// Absolute risk tolerance -u'(x)/u''(x) > 0.
    pub fn risk_tolerance(&self, x: T) -> Result<T> {
        self.check_domain(x)?;
        Ok(-self.u_prime(x) / self.u_second(x))
    }

    /// Least-squares affine fit of risk tolerance over an increasing grid.
    ///
    /// A residual at or below the classification tolerance means the
    /// tolerance is affine on this grid, i.e. the utility is HARA there.
    pub fn hara_residual(&self, grid: &[T]) -> Result<HaraFit<T>> {
        if grid.len() < 3 {
            return Err(Error::InvalidGrid(
                "hara_residual requires at least 3 grid points".into(),
            ));
        }
        for w in grid.windows(2) {
            if !(w[0] < w[1]) {
                return Err(Error::InvalidGrid(
                    "hara_residual grid must be strictly increasing".into(),
                ));
            }
        }
        let tol: Vec<T> = grid
            .iter()
            .map(|&x| self.risk_tolerance(x))
            .collect::<Result<_>>()?;

        let n = T::of(grid.len() as f64);
        let mean_x = grid.iter().fold(T::zero(), |a, &x| a + x) / n;
        let mean_t = tol.iter().fold(T::zero(), |a, &t| a + t) / n;
        let mut sxx = T::zero();
        let mut sxt = T::zero();
        for (&x, &t) in grid.iter().zip(&tol) {
            sxx = sxx + (x - mean_x) * (x - mean_x);
            sxt = sxt + (x - mean_x) * (t - mean_t);
        }
        let a = sxt / sxx;
        let b = mean_t - a * mean_x;
        let residual = grid
            .iter()
            .zip(&tol)
            .map(|(&x, &t)| (t - (a * x + b)).abs())
            .fold(T::zero(), T::max);
        Ok(HaraFit { residual, a, b })
    }

    /// Default grid for tolerance fitting and theorem-class sampling,
    /// shifted and clipped into the domain.
    pub fn default_classification_grid(&self, points: usize) -> Result<Vec<T>> {
        let pad = |edge: T| T::of(0.05) * (T::one() + edge.abs());
        let lo = if self.domain_low.is_finite() {
            self.domain_low + pad(self.domain_low)
        } else {
            T::of(0.05)
        };
        let hi = if self.domain_high.is_finite() {
            self.domain_high - pad(self.domain_high)
        } else {
            lo + T::of(20.0)
        };
        if !(lo < hi) || points < 3 {
            return Err(Error::InvalidGrid(
                "cannot build a classification grid inside the utility domain".into(),
            ));
        }
        let n = T::of((points - 1) as f64);
        Ok((0..points)
            .map(|i| lo + (hi - lo) * T::of(i as f64) / n)
            .collect())
    }

    pub(crate) fn check_domain(&self, x: T) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::OutsideDomain {
                value: x.to_f64().unwrap_or(f64::NAN),
                low: self.domain_low.to_f64().unwrap_or(f64::NEG_INFINITY),
                high: self.domain_high.to_f64().unwrap_or(f64::INFINITY),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type U = UtilityFunction<f64>;

    fn rel_err(got: f64, want: f64) -> f64 {
        (got - want).abs() / want.abs().max(1e-300)
    }

    #[test]
    fn crra_marginal_matches_power_law() {
        let u = U::crra(2.0).unwrap();
        assert!((u.u_prime(3.0) - 1.0 / 9.0).abs() < 1e-15);
        assert_eq!(u.domain(), (0.0, f64::INFINITY));
    }

    #[test]
    fn cara_marginal_at_zero_is_one() {
        let u = U::cara(1.0).unwrap();
        assert_eq!(u.u_prime(0.0), 1.0);
        assert_eq!(u.domain_low(), f64::NEG_INFINITY);
    }

    #[test]
    fn mixture_derivatives_sum_the_monomials() {
        // u' = x^-1 + x^-3, u'' = -x^-2 - 3 x^-4, u''' = 2 x^-3 + 12 x^-5.
        let u = U::crra_mixture(vec![1.0, 1.0], vec![1.0, 3.0]).unwrap();
        assert!((u.u_prime(1.0) - 2.0).abs() < 1e-15);
        assert!((u.u_second(1.0) - (-4.0)).abs() < 1e-15);
        assert!((u.u_third(1.0) - 14.0).abs() < 1e-15);
    }

    #[test]
    fn invalid_parameters_are_named() {
        let err = U::hara(-1.5, 1.0, 1.0).unwrap_err();
        assert!(err.to_string().contains("a > -1"), "{err}");
        assert!(U::crra(0.0).is_err());
        assert!(U::cara(-1.0).is_err());
        assert!(U::crra_mixture(vec![1.0, 1.0], vec![2.0, 2.0]).is_err());
        assert!(U::crra_mixture(vec![1.0, -1.0], vec![1.0, 2.0]).is_err());
    }

    #[test]
    fn inverse_marginal_closed_forms() {
        let u = U::crra(2.0).unwrap();
        assert!((u.inverse_marginal(4.0).unwrap() - 0.5).abs() < 1e-15);
        let u = U::crra(1.0).unwrap();
        assert!((u.inverse_marginal(1.0).unwrap() - 1.0).abs() < 1e-15);
        let u = U::cara(2.0).unwrap();
        assert!(rel_err(u.inverse_marginal(u.u_prime(-3.0)).unwrap(), -3.0) < 1e-12);
        let u = U::hara(0.5, 1.0, 1.0).unwrap();
        assert!(rel_err(u.inverse_marginal(u.u_prime(2.0)).unwrap(), 2.0) < 1e-12);
    }

    #[test]
    fn mixture_inverse_agrees_with_bisection_oracle() {
        let u = U::crra_mixture(vec![1.0, 1.0], vec![1.0, 3.0]).unwrap();
        // Independent bisection oracle on u'(x) - m.
        let oracle = |m: f64| {
            let (mut lo, mut hi) = (1e-6, 1e6);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if u.u_prime(mid) > m {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        };
        assert!((u.inverse_marginal(2.0).unwrap() - 1.0).abs() < 1e-12);
        for m in [0.01, 0.5, 2.0, 37.0, 1e4] {
            let got = u.inverse_marginal(m).unwrap();
            assert!(rel_err(got, oracle(m)) < 1e-9, "m = {m}");
        }
    }

    #[test]
    fn risk_tolerance_values() {
        let u = U::crra(2.0).unwrap();
        assert!((u.risk_tolerance(3.0).unwrap() - 1.5).abs() < 1e-15);
        let u = U::cara(2.0).unwrap();
        assert!((u.risk_tolerance(7.3).unwrap() - 0.5).abs() < 1e-12);
        let u = U::crra_mixture(vec![1.0, 1.0], vec![1.0, 3.0]).unwrap();
        assert!(rel_err(u.risk_tolerance(2.0).unwrap(), 10.0 / 7.0) < 1e-14);
    }

    #[test]
    fn risk_tolerance_rejects_out_of_domain() {
        let u = U::crra(2.0).unwrap();
        assert!(matches!(
            u.risk_tolerance(-1.0),
            Err(Error::OutsideDomain { .. })
        ));
    }

    #[test]
    fn hara_residual_exact_for_affine_tolerance() {
        let u = U::crra(2.0).unwrap();
        let fit = u.hara_residual(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert!(fit.residual <= 1e-10);
        assert!((fit.a - 0.5).abs() < 1e-12);
        assert!(fit.b.abs() < 1e-12);

        let u = U::cara(1.0).unwrap();
        let fit = u.hara_residual(&[1.0, 2.0, 3.0]).unwrap();
        assert!(fit.residual <= 1e-10);
        assert!(fit.a.abs() < 1e-12);
        assert!((fit.b - 1.0).abs() < 1e-12);

        let u = U::quadratic(5.0, 2.0).unwrap();
        let fit = u.hara_residual(&[0.0, 1.0, 2.0]).unwrap();
        assert!(fit.residual <= 1e-10);
        assert!((fit.a + 1.0).abs() < 1e-12);
        assert!((fit.b - 5.0).abs() < 1e-12);
    }

    #[test]
    fn hara_residual_positive_for_mixture() {
        // T(x) = (x^3 + x)/(x^2 + 3) at 1, 2, 3 is (1/2, 10/7, 5/2); the
        // least-squares line is x - 11/21, so the max deviation is 1/21.
        let u = U::crra_mixture(vec![1.0, 1.0], vec![1.0, 3.0]).unwrap();
        let fit = u.hara_residual(&[1.0, 2.0, 3.0]).unwrap();
        assert!(rel_err(fit.residual, 1.0 / 21.0) < 1e-10, "{}", fit.residual);
        assert!(fit.residual > HARA_TOL);
    }

    #[test]
    fn spec_round_trips_through_json() {
        let spec: UtilitySpec<f64> = serde_json::from_str(r#"{"family":"hara","a":0.5,"b":1.0}"#)
            .unwrap();
        assert_eq!(
            spec,
            UtilitySpec::Hara {
                a: 0.5,
                b: 1.0,
                scale: 1.0
            }
        );
        let spec: UtilitySpec<f64> =
            serde_json::from_str(r#"{"family":"mixture","weights":[1,1],"exponents":[1,3]}"#)
                .unwrap();
        assert!(make_utility(&spec).is_ok());
    }

    #[test]
    fn custom_callbacks_behave_like_crra() {
        let marginal = CustomMarginal {
            u_prime: Arc::new(|x: f64| x.powi(-2)),
            u_second: Arc::new(|x: f64| -2.0 * x.powi(-3)),
            u_third: Arc::new(|x: f64| 6.0 * x.powi(-4)),
            domain_low: 0.0,
            domain_high: f64::INFINITY,
        };
        let u = U::custom(marginal).unwrap();
        assert!(rel_err(u.inverse_marginal(4.0).unwrap(), 0.5) < 1e-12);
        assert!(rel_err(u.risk_tolerance(3.0).unwrap(), 1.5) < 1e-12);
        assert!(u.log_u_prime(1.0).is_none());
    }
}
