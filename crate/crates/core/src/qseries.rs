//! Truncated q-series with exact integer coefficients, and the fermionic
//! (constant-sign lattice sum) form of the level-1 ⊗ level-1 branching
//! functions
//!
//! ```text
//! b(q) = Σ_m q^{mᵀC⁻¹m − mᵀC⁻¹e_{s−t+n} + c(s,t)} / Π_i (q)_{m_i}
//! ```
//!
//! summed over `m ∈ Z_{≥0}^{n−1}` with `t + Σ i·m_i ≡ 0 (mod n)`, where `C`
//! is the sl(n) Cartan matrix and `e_n = 0`.
//!
//! The constant is `c(s,t) = min(st, (n−s)(n−t)) / n`. With plain `st/n`
//! the sum comes out multiplied by `q^{s+t−n}` whenever `s + t > n`; the
//! minimum is the form that is invariant under `Λ_i ↦ Λ_{−i}`.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{check_rank, Error};
use crate::par;
use crate::weight::inverse_cartan;

/// A power series in `q` known exactly up to and including `q^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, order)
    }

    /// `q^exp`, which is zero when `exp > order`.
    pub fn monomial(exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = BigInt::one();
        }
        s
    }

    pub fn from_coeffs<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        let coeffs: Vec<BigInt> = coeffs.into_iter().map(BigInt::from).collect();
        assert!(!coeffs.is_empty(), "a truncated series needs order >= 0");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    /// Same series, known to a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order());
        TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Multiplies by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for e in k..=order {
            out.coeffs[e] = self.coeffs[e - k].clone();
        }
        out
    }

    /// Divides by `q^k`. Fails if a nonzero term below `q^k` would be lost.
    /// The result is known to order `order - k`.
    pub fn shift_down(&self, k: usize) -> Result<Self, Error> {
        assert!(k <= self.order());
        if let Some(c) = self.coeffs[..k].iter().find(|c| !c.is_zero()) {
            return Err(Error::NonzeroShiftedTerm { shift: k, coefficient: c.to_string() });
        }
        Ok(TruncatedSeries { coeffs: self.coeffs[k..].to_vec() })
    }

    /// In-place multiplication by `1 / (1 - q^k)`.
    fn divide_by_one_minus_q_pow(&mut self, k: usize) {
        for e in k..self.coeffs.len() {
            let prev = self.coeffs[e - k].clone();
            self.coeffs[e] += prev;
        }
    }

    /// Coefficients as `u64`, if they all fit.
    pub fn to_u64_vec(&self) -> Option<Vec<u64>> {
        self.coeffs.iter().map(|c| c.to_u64()).collect()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] + O(q^{})", shown.join(", "), self.order() + 1)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order).map(|e| &self.coeffs[e] + &rhs.coeffs[e]).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = TruncatedSeries::zero(order);
        for (a, ca) in self.coeffs.iter().enumerate().take(order + 1) {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in rhs.coeffs.iter().enumerate().take(order + 1 - a) {
                out.coeffs[a + b] += ca * cb;
            }
        }
        out
    }
}

/// `1 / (q)_k = 1 / ((1−q)(1−q²)⋯(1−q^k))` to order `order`.
pub fn inv_pochhammer(k: usize, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for i in 1..=k.min(order) {
        s.divide_by_one_minus_q_pow(i);
    }
    s
}

/// The quadratic form and congruence data of one fermionic sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticFormData {
    n: usize,
    s: usize,
    t: usize,
    inverse_cartan: Vec<Vec<Ratio<i64>>>,
}

impl QuadraticFormData {
    pub fn new(n: usize, s: usize, t: usize) -> Result<Self, Error> {
        check_rank(n)?;
        if !(s <= t && t < n) {
            return Err(Error::InvalidFermionicLabel { s, t, n });
        }
        Ok(QuadraticFormData { n, s, t, inverse_cartan: inverse_cartan(n)? })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn inverse_cartan(&self) -> &[Vec<Ratio<i64>>] {
        &self.inverse_cartan
    }

    fn dim(&self) -> usize {
        self.n - 1
    }

    /// Column `s − t + n` of `C⁻¹` (0-based row index), or zeros when it is `n`.
    fn linear_column(&self) -> Vec<Ratio<i64>> {
        let r = self.s + self.n - self.t;
        if r == self.n {
            vec![Ratio::zero(); self.dim()]
        } else {
            (0..self.dim()).map(|i| self.inverse_cartan[i][r - 1]).collect()
        }
    }

    /// `t + Σ i·m_i ≡ 0 (mod n)` with 1-based `i`.
    pub fn is_admissible(&self, m: &[usize]) -> bool {
        let total: usize = self.t + m.iter().enumerate().map(|(i, &mi)| (i + 1) * mi).sum::<usize>();
        total.is_multiple_of(self.n)
    }

    /// The exact (rational) exponent of `q` at lattice point `m`.
    pub fn exponent(&self, m: &[usize]) -> Ratio<i64> {
        assert_eq!(m.len(), self.dim());
        let mut q = self.constant();
        let lin = self.linear_column();
        for (i, &mi) in m.iter().enumerate() {
            if mi == 0 {
                continue;
            }
            let mi = mi as i64;
            for (c, &mj) in self.inverse_cartan[i].iter().zip(m) {
                q += c * mi * mj as i64;
            }
            q -= lin[i] * mi;
        }
        q
    }

    /// The lower bound `Q(m) ≥ Σ_i (a_i m_i² − b_i m_i) + c(s,t)` with
    /// `a_i = C⁻¹_ii`, `b_i = (C⁻¹e)_i`, which holds because `C⁻¹` is
    /// entrywise nonnegative.
    fn separable_terms(&self) -> Vec<(Ratio<i64>, Ratio<i64>)> {
        let lin = self.linear_column();
        (0..self.dim()).map(|i| (self.inverse_cartan[i][i], lin[i])).collect()
    }

    /// `min(st, (n−s)(n−t)) / n`.
    pub fn constant(&self) -> Ratio<i64> {
        let (n, s, t) = (self.n, self.s, self.t);
        Ratio::new((s * t).min((n - s) * (n - t)) as i64, n as i64)
    }

    /// A bound `M` such that every `m` with some `m_i > M` has `Q(m) > order`.
    pub fn coordinate_bound(&self, order: usize) -> usize {
        let terms = self.separable_terms();
        let mins: Vec<Ratio<i64>> =
            terms.iter().map(|&(a, b)| integer_min_of_quadratic(a, b)).collect();
        let total_min: Ratio<i64> = mins.iter().copied().sum();
        (0..terms.len())
            .map(|i| {
                let rest = total_min - mins[i] + self.constant();
                let (a, b) = terms[i];
                last_point_within(|x| a * x * x - b * x + rest, order)
            })
            .max()
            .unwrap_or(0)
    }

    /// A bound `S` such that every `m` with `Σ m_i > S` has `Q(m) > order`.
    pub fn shell_bound(&self, order: usize) -> usize {
        let terms = self.separable_terms();
        let a_min = terms.iter().map(|t| t.0).min().expect("n >= 2");
        let b_max = terms.iter().map(|t| t.1).max().expect("n >= 2");
        let dim = Ratio::from_integer(self.dim() as i64);
        let c = self.constant();
        last_point_within(|x| a_min * x * x / dim - b_max * x + c, order)
    }
}

fn integer_min_of_quadratic(a: Ratio<i64>, b: Ratio<i64>) -> Ratio<i64> {
    // a x² − b x over integers x ≥ 0; the vertex sits at b / 2a
    let vertex = (b / (a * 2)).floor().to_integer().max(0);
    [vertex, vertex + 1]
        .iter()
        .map(|&x| a * x * x - b * x)
        .min()
        .expect("two candidates")
        .min(Ratio::zero())
}

/// Largest integer `x ≥ 0` with `f(x) ≤ order`, for convex `f` with positive
/// leading term. Returns 0 when no such `x` exists.
fn last_point_within<F: Fn(i64) -> Ratio<i64>>(f: F, order: usize) -> usize {
    let limit = Ratio::from_integer(order as i64);
    let mut last = 0;
    let mut x = 0;
    loop {
        let fx = f(x);
        if fx <= limit {
            last = x;
        } else if f(x + 1) >= fx {
            // convex and already nondecreasing: nothing further fits
            break;
        }
        x += 1;
    }
    last as usize
}

/// The result of a fermionic evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermionicSum {
    pub series: TruncatedSeries,
    /// Lattice points examined inside the certified enumeration region.
    pub points_visited: usize,
    /// Admissible points whose exponent was checked for integrality.
    pub admissible_points: usize,
}

/// The fermionic lattice sum labelled by `Λ_s + Λ_t`, to order `order`.
pub fn fermionic_series(n: usize, s: usize, t: usize, order: usize) -> Result<FermionicSum, Error> {
    let form = QuadraticFormData::new(n, s, t)?;
    fermionic_series_with_bounds(&form, order, form.coordinate_bound(order), form.shell_bound(order))
}

/// As [`fermionic_series`], but with an explicit per-coordinate cap and
/// shell limit. Any caps at or above the certified ones give the same series.
pub fn fermionic_series_with_bounds(
    form: &QuadraticFormData,
    order: usize,
    coordinate_cap: usize,
    shell_cap: usize,
) -> Result<FermionicSum, Error> {
    let pochhammers: Vec<TruncatedSeries> =
        (0..=coordinate_cap).map(|k| inv_pochhammer(k, order)).collect();
    let dim = form.dim();
    let per_shell = par::map_range(0..shell_cap + 1, |shell| {
        let mut acc = TruncatedSeries::zero(order);
        let mut visited = 0usize;
        let mut admissible = 0usize;
        let mut point = vec![0usize; dim];
        let mut status = Ok(());
        for_each_composition(shell, coordinate_cap, &mut point, 0, &mut |m| {
            if status.is_err() {
                return;
            }
            visited += 1;
            if !form.is_admissible(m) {
                return;
            }
            admissible += 1;
            let exponent = form.exponent(m);
            if !exponent.is_integer() || exponent.is_negative() {
                status = Err(Error::NonIntegralExponent {
                    exponent: exponent.to_string(),
                    point: m.to_vec(),
                });
                return;
            }
            let e = exponent.to_integer() as usize;
            if e > order {
                return;
            }
            let mut term = TruncatedSeries::monomial(e, order);
            for &mi in m {
                if mi > 0 {
                    term = &term * &pochhammers[mi];
                }
            }
            acc = &acc + &term;
        });
        status.map(|_| (acc, visited, admissible))
    });
    let mut series = TruncatedSeries::zero(order);
    let mut points_visited = 0;
    let mut admissible_points = 0;
    for shell in per_shell {
        let (acc, visited, admissible) = shell?;
        series = &series + &acc;
        points_visited += visited;
        admissible_points += admissible;
    }
    Ok(FermionicSum { series, points_visited, admissible_points })
}

/// Calls `f` on every `m` with `Σ m = total` and each `m_i ≤ cap`.
fn for_each_composition<F: FnMut(&[usize])>(
    total: usize,
    cap: usize,
    point: &mut [usize],
    at: usize,
    f: &mut F,
) {
    let len = point.len();
    if at + 1 == len {
        if total <= cap {
            point[at] = total;
            f(point);
        }
        return;
    }
    for v in 0..=total.min(cap) {
        point[at] = v;
        for_each_composition(total - v, cap, point, at + 1, f);
    }
    point[at] = 0;
}

/// Serializable summary used by the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct FermionicReport {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub coeffs: Vec<String>,
    pub points_visited: usize,
}

impl FermionicSum {
    pub fn report(&self, n: usize, s: usize, t: usize) -> FermionicReport {
        FermionicReport {
            n,
            s,
            t,
            coeffs: self.series.coeffs().iter().map(|c| c.to_string()).collect(),
            points_visited: self.points_visited,
        }
    }
}
