//! The transcendental bound parameters of the isoperimetric proof and
//! verifiers for its ingredient inequalities.
//!
//! `K(p)` solves `K^{2K} = 1/p` and `kappa_p(i)` solves
//! `i^kappa kappa^kappa = 1/p`; both are found by bisection in the log
//! domain with a residual certificate. The downstream consumers only take
//! floors and comparisons, so double precision plus the certificate is
//! enough; exactness is never claimed for `K` or `kappa` themselves. All
//! logarithms are base 2.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::characters::{determinantal_expansion, xi_on_class, xi_two_row, CharacterTable};
use crate::counting::{class_size, factorial};
use crate::partition::Partition;
use crate::sets::{sweep_class_subsets, ClassContext, ClassInteractionMatrix, ConjClassSet};
use crate::{Error, Result};

/// Default slack parameter `M` for the bound solvers.
pub const DEFAULT_M: u32 = 18;
/// Relative residual demanded from the bisection solvers.
pub const SOLVER_TOLERANCE: f64 = 1e-12;

/// Solver output for `K(p)`, together with `t_p = floor(K/M)`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundParams {
    /// Measure `p = |A|/n!` as an exact rational (decimal string pair).
    pub p_numer: String,
    pub p_denom: String,
    pub k: f64,
    pub m: u32,
    pub t_p: u64,
    /// `|2K log2 K - log2(1/p)| / max(1, log2(1/p))`.
    pub residual: f64,
}

fn log2_inverse(p: &BigRational) -> Result<f64> {
    if !p.is_positive() || p > &BigRational::new(BigInt::one(), BigInt::from(2)) {
        return Err(Error::BadParameter(format!("p={p} not in (0, 1/2]")));
    }
    // log2(1/p) = log2(denom) - log2(numer), stable for tiny p
    let numer = p.numer().to_f64().unwrap_or(f64::INFINITY);
    let denom = p.denom().to_f64().unwrap_or(f64::INFINITY);
    if numer.is_finite() && denom.is_finite() {
        Ok(denom.log2() - numer.log2())
    } else {
        Err(Error::BadParameter(format!("p={p} too extreme for f64 logs")))
    }
}

fn bisect_increasing(mut lo: f64, mut hi: f64, f: impl Fn(f64) -> f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Solves `K^{2K} = 1/p` for `K >= 1` with `M = 18`.
pub fn solve_k(p: &BigRational) -> Result<BoundParams> {
    solve_k_with_m(p, DEFAULT_M)
}

/// Solves `K^{2K} = 1/p` by bisection on the increasing map
/// `K -> 2K log2 K` over `[1, 2 log2(1/p) + 2]`.
pub fn solve_k_with_m(p: &BigRational, m: u32) -> Result<BoundParams> {
    if m < 3 {
        return Err(Error::BadParameter(format!("M={m} must be >= 3")));
    }
    let target = log2_inverse(p)?;
    let hi = 2.0 * target + 2.0;
    let k = bisect_increasing(1.0, hi, |x| 2.0 * x * x.log2() - target);
    let residual = (2.0 * k * k.log2() - target).abs() / target.max(1.0);
    if residual > SOLVER_TOLERANCE {
        return Err(Error::ExactnessViolation(format!(
            "K-solver residual {residual:e} exceeds {SOLVER_TOLERANCE:e}"
        )));
    }
    Ok(BoundParams {
        p_numer: p.numer().to_string(),
        p_denom: p.denom().to_string(),
        k,
        m,
        t_p: (k / m as f64).floor() as u64,
        residual,
    })
}

impl BoundParams {
    /// `log2(1/p)` recovered from the stored exact `p`.
    pub fn log2_inv_p(&self) -> f64 {
        let numer: f64 = self.p_numer.parse().unwrap_or(f64::NAN);
        let denom: f64 = self.p_denom.parse().unwrap_or(f64::NAN);
        denom.log2() - numer.log2()
    }

    /// The sandwich `log2(1/p) / (2 log2 log2(2/p)) <= K`, and `K <= n`
    /// whenever `p >= 1/n!`.
    pub fn k_sandwich_holds(&self, n: usize) -> bool {
        let target = self.log2_inv_p();
        let loglog = (1.0 + target).log2().max(f64::MIN_POSITIVE);
        let lower = target / (2.0 * loglog);
        if self.k < lower - 1e-9 {
            return false;
        }
        let p = BigRational::new(
            BigInt::parse_bytes(self.p_numer.as_bytes(), 10).unwrap(),
            BigInt::parse_bytes(self.p_denom.as_bytes(), 10).unwrap(),
        );
        let one_over_n_fact = BigRational::new(BigInt::one(), BigInt::from(factorial(n)));
        if p >= one_over_n_fact && self.k > n as f64 + 1e-9 {
            return false;
        }
        true
    }

    /// The `t_p` sandwich `log2(1/p)/(4M log2 log2(2/p)) <= t_p <= n/M`.
    ///
    /// The lower bound presupposes `t_p >= 1` (`K >= M`); callers should
    /// gate on [`Self::t_p_sandwich_applicable`].
    pub fn t_p_sandwich_holds(&self, n: usize) -> bool {
        let target = self.log2_inv_p();
        let loglog = (1.0 + target).log2().max(f64::MIN_POSITIVE);
        let lower = target / (4.0 * self.m as f64 * loglog);
        let upper = n as f64 / self.m as f64;
        lower <= self.t_p as f64 + 1e-9 && (self.t_p as f64) <= upper + 1e-9
    }

    pub fn t_p_sandwich_applicable(&self) -> bool {
        self.t_p >= 1
    }
}

/// Solver output for `kappa_p(i)`.
#[derive(Clone, Debug, Serialize)]
pub struct KappaParams {
    pub i: u64,
    pub kappa: f64,
    /// `k_p(i) = floor(kappa)`.
    pub k_floor: u64,
    pub residual: f64,
}

/// Solves `i^kappa kappa^kappa = 1/p` for `kappa >= 1` by log-domain
/// bisection. Requires `i <= 1/p` so that the root is at least 1.
pub fn solve_kappa(p: &BigRational, i: u64) -> Result<KappaParams> {
    if i < 1 {
        return Err(Error::BadParameter("kappa solver needs i >= 1".into()));
    }
    let target = log2_inverse(p)?;
    let log_i = (i as f64).log2();
    if log_i > target {
        return Err(Error::BadParameter(format!(
            "i={i} exceeds 1/p; kappa_p(i) < 1 unsupported"
        )));
    }
    let hi = 2.0 * target + 2.0;
    let kappa = bisect_increasing(1.0, hi, |x| x * (x.log2() + log_i) - target);
    let residual = (kappa * (kappa.log2() + log_i) - target).abs() / target.max(1.0);
    if residual > SOLVER_TOLERANCE {
        return Err(Error::ExactnessViolation(format!(
            "kappa-solver residual {residual:e} exceeds {SOLVER_TOLERANCE:e}"
        )));
    }
    Ok(KappaParams {
        i,
        kappa,
        k_floor: kappa.floor() as u64,
        residual,
    })
}

/// Left-hand side of the weight lemma:
/// `(1/n!) sum_{sigma in A} xi_(n-s,s)(sigma)`, exact.
pub fn weight_lemma_lhs(set: &ConjClassSet, s: usize, ctx: &ClassContext) -> Result<BigRational> {
    let n = ctx.n();
    if 2 * s > n {
        return Err(Error::BadParameter(format!("s={s} exceeds n/2 with n={n}")));
    }
    let mut total = BigUint::zero();
    for idx in set.indices() {
        let lambda = ctx.table().get(idx);
        total += class_size(lambda)? * xi_two_row(s, lambda)?;
    }
    Ok(BigRational::new(
        BigInt::from(total),
        BigInt::from(factorial(n)),
    ))
}

/// Checks both links of the subset-counting chain for one cycle type:
/// `xi_(n-s,s)(lambda) <= (sum_{i<=s} C_i)^s <= s^{s-1} sum_{i<=s} C_i^s`.
pub fn jensen_chain_check(lambda: &Partition, s: usize) -> Result<bool> {
    let n = lambda.n();
    if s < 1 || 2 * s > n {
        return Err(Error::BadParameter(format!("s={s} not in [1, n/2] for n={n}")));
    }
    let xi = xi_two_row(s, lambda)?;
    let small_cycles: u64 = (1..=s).map(|i| lambda.multiplicity(i) as u64).sum();
    let mid = BigUint::from(small_cycles).pow(s as u32);
    if xi > mid {
        return Ok(false);
    }
    let power_sum: BigUint = (1..=s)
        .map(|i| BigUint::from(lambda.multiplicity(i) as u64).pow(s as u32))
        .sum();
    let rhs = BigUint::from(s as u64).pow(s as u32 - 1) * power_sum;
    Ok(mid <= rhs)
}

/// Certified evaluation of the factorial tail bound
/// `sum_{j>=k} j^s/j! <= k^{-(1-3/M)k}` under `Ms <= k` and `e^M <= k`.
#[derive(Clone, Debug, Serialize)]
pub struct FactorialTailReport {
    pub s: u64,
    pub k: u64,
    pub m: u32,
    /// Upper bound for `log2` of the tail sum (explicit terms plus a
    /// geometric majorant for the remainder, rounded upward).
    pub lhs_log2_upper: f64,
    /// `log2` of the claimed bound `k^{-(1-3/M)k}`.
    pub rhs_log2: f64,
    pub holds: bool,
}

/// Evaluates the tail `sum_{j=k}^infty j^s/j!` by 200 explicit log-domain
/// terms and a geometric majorant for the rest (term ratio < 1/2 past the
/// cutoff under the preconditions), then compares against the bound in the
/// log domain.
pub fn factorial_tail_check(s: u64, k: u64, m: u32) -> Result<FactorialTailReport> {
    if m < 3 {
        return Err(Error::BadParameter(format!("M={m} must be >= 3")));
    }
    if m as u64 * s > k {
        return Err(Error::BadParameter(format!("precondition Ms <= k fails: {m}*{s} > {k}")));
    }
    if (m as f64).exp() > k as f64 {
        return Err(Error::BadParameter(format!("precondition e^M <= k fails: e^{m} > {k}")));
    }
    let cutoff = k + 200;
    // ln(j!) built incrementally from ln(k!)
    let mut ln_fact = 0.0f64;
    for t in 1..=k {
        ln_fact += (t as f64).ln();
    }
    let ln_terms: Vec<f64> = (k..=cutoff + 1)
        .map(|j| {
            if j > k {
                ln_fact += (j as f64).ln();
            }
            s as f64 * (j as f64).ln() - ln_fact
        })
        .collect();
    // the final entry (j = cutoff+1) seeds the geometric tail majorant:
    // term ratio (j+1)^s / ((j+1) j^s) < 1/2 beyond the cutoff, so the
    // remainder is below 2 * term(cutoff+1)
    let ratio = (s as f64 / cutoff as f64).exp() / (cutoff as f64 + 2.0);
    if ratio >= 0.5 {
        return Err(Error::ExactnessViolation(format!(
            "tail ratio {ratio} not below 1/2 at cutoff {cutoff}"
        )));
    }
    let max_ln = ln_terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut sum = 0.0f64;
    for (idx, &lt) in ln_terms.iter().enumerate() {
        let weight = if idx == ln_terms.len() - 1 { 2.0 } else { 1.0 };
        sum += weight * (lt - max_ln).exp();
    }
    // upward rounding margin on the float accumulation
    let lhs_ln_upper = max_ln + (sum * (1.0 + 1e-9)).ln();
    let lhs_log2_upper = lhs_ln_upper / std::f64::consts::LN_2;
    let rhs_log2 = -(1.0 - 3.0 / m as f64) * k as f64 * (k as f64).log2();
    Ok(FactorialTailReport {
        s,
        k,
        m,
        lhs_log2_upper,
        rhs_log2,
        holds: lhs_log2_upper <= rhs_log2,
    })
}

/// Empirical sweep of the main isoperimetric ratio
/// `r(A) = |dA| / ((log2(1/p)/log2 log2(2/p)) * n * |A|)` over all nonempty
/// conjugation-invariant `A` with `|A| <= n!/2`.
#[derive(Clone, Debug, Serialize)]
pub struct RatioSweepReport {
    pub n: usize,
    pub sets_examined: u64,
    pub min_ratio: f64,
    pub argmin_classes: Vec<String>,
    pub argmin_size: String,
    pub argmin_boundary: String,
    /// Counts of sets falling in ratio buckets `[i/10, (i+1)/10)`.
    pub ratio_histogram: Vec<u64>,
    /// Whether the proved spectral-gap floor held on every set (asserted).
    pub floor_holds: bool,
}

pub fn isoperimetry_ratio_sweep(
    ctx: &ClassContext,
    matrix: &ClassInteractionMatrix,
) -> Result<RatioSweepReport> {
    let n = ctx.n();
    let n_fact: u128 = ctx.class_sizes().iter().sum();
    let mut min_ratio = f64::INFINITY;
    let mut argmin_mask = 0u64;
    let mut argmin_size = 0u128;
    let mut argmin_boundary = 0u128;
    let mut histogram = vec![0u64; 40];
    let mut sets_examined = 0u64;
    let mut floor_holds = true;
    sweep_class_subsets(ctx, matrix, |mask, size, boundary| {
        if size == 0 || 2 * size > n_fact {
            return;
        }
        sets_examined += 1;
        // proved floor: |dA| >= |A|(n!-|A|)/(n-1)!, exact in u128
        // (n-1)! divides n! so cross-multiplied comparison stays integral
        let nm1_fact = n_fact / n as u128;
        if boundary * nm1_fact < size * (n_fact - size) {
            floor_holds = false;
        }
        let p = size as f64 / n_fact as f64;
        let log_term = (1.0 / p).log2() / (2.0 / p).log2().log2();
        let ratio = boundary as f64 / (log_term * n as f64 * size as f64);
        let bucket = ((ratio * 10.0) as usize).min(histogram.len() - 1);
        histogram[bucket] += 1;
        if ratio < min_ratio {
            min_ratio = ratio;
            argmin_mask = mask;
            argmin_size = size;
            argmin_boundary = boundary;
        }
    })?;
    let argmin = ConjClassSet::from_mask(ctx.table(), argmin_mask);
    Ok(RatioSweepReport {
        n,
        sets_examined,
        min_ratio,
        argmin_classes: argmin.class_strings(ctx.table()),
        argmin_size: argmin_size.to_string(),
        argmin_boundary: argmin_boundary.to_string(),
        ratio_histogram: histogram,
        floor_holds,
    })
}

/// Link-by-link verification of the weight-bound chain for one `alpha`:
/// the character bound by the expansion, the row-collapse bound, and the
/// coefficient-sum bound, each evaluated exactly on every class.
#[derive(Clone, Debug, Serialize)]
pub struct WBoundReport {
    pub alpha: String,
    pub u: usize,
    pub boundchi_holds: bool,
    pub collapse_holds: bool,
    pub coeff_abs_sum: u64,
    pub coeff_bound: u64,
    pub coeff_bound_holds: bool,
}

pub fn w_bound_ingredients(alpha: &Partition, ct: &CharacterTable) -> Result<WBoundReport> {
    let n = ct.n();
    if n > 9 {
        return Err(Error::NOutOfRange(n, 9));
    }
    let u = n - alpha.part(1);
    if u > 4 {
        return Err(Error::ExpansionTooLarge { got: u, max: 4 });
    }
    let expansion = determinantal_expansion(alpha)?;
    let coeff_abs_sum = expansion.coefficient_abs_sum();
    let coeff_bound: u64 = (1..=(u as u64 + 1)).product();
    let mut boundchi_holds = true;
    let mut collapse_holds = true;
    for lambda in ct.partitions().iter() {
        let chi = ct.chi(alpha, lambda).expect("class in table");
        let chi_abs = chi.abs();
        let mut direct = BigInt::zero();
        let mut collapsed = BigInt::zero();
        for (beta_parts, &c) in expansion.terms() {
            let beta = Partition::new(beta_parts.clone())?;
            let abs_c = BigInt::from(c.unsigned_abs());
            direct += &abs_c * BigInt::from(xi_on_class(&beta, lambda)?);
            let s = n - beta.part(1);
            collapsed += abs_c
                * BigInt::from(factorial(s))
                * BigInt::from(xi_two_row(s.min(n - s), lambda)?);
        }
        if chi_abs > direct {
            boundchi_holds = false;
        }
        if chi_abs > collapsed {
            collapse_holds = false;
        }
    }
    Ok(WBoundReport {
        alpha: alpha.to_string(),
        u,
        boundchi_holds,
        collapse_holds,
        coeff_abs_sum,
        coeff_bound,
        coeff_bound_holds: coeff_abs_sum <= coeff_bound,
    })
}
