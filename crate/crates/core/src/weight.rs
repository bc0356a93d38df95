//! The weight lattice of affine sl(n): coordinates over the fundamental
//! weights `Λ_0 … Λ_{n-1}` plus a coefficient of the null root `δ`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{check_rank, Error};
use crate::partition::Partition;

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct AffineWeight {
    lambda: Vec<i64>,
    delta: i64,
}

impl AffineWeight {
    pub fn zero(n: usize) -> Self {
        AffineWeight { lambda: vec![0; n], delta: 0 }
    }

    pub fn from_parts(lambda: Vec<i64>, delta: i64) -> Self {
        AffineWeight { lambda, delta }
    }

    /// `Λ_i`, with `i` read modulo `n`.
    pub fn fundamental(n: usize, i: i64) -> Self {
        let mut w = AffineWeight::zero(n);
        w.lambda[residue(i, n)] = 1;
        w
    }

    pub fn delta(n: usize) -> Self {
        AffineWeight { lambda: vec![0; n], delta: 1 }
    }

    /// `α_i = -Λ_{i-1} + 2Λ_i - Λ_{i+1}`, plus `δ` when `i = 0`.
    pub fn simple_root(n: usize, i: usize) -> Self {
        let mut w = AffineWeight::zero(n);
        let i = i % n;
        w.lambda[i] += 2;
        w.lambda[(i + n - 1) % n] -= 1;
        w.lambda[(i + 1) % n] -= 1;
        if i == 0 {
            w.delta = 1;
        }
        w
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda_coeffs(&self) -> &[i64] {
        &self.lambda
    }

    pub fn delta_coeff(&self) -> i64 {
        self.delta
    }

    pub fn level(&self) -> i64 {
        self.lambda.iter().sum()
    }

    /// Nonnegative on every `Λ_i`; the `δ` part is ignored.
    pub fn is_dominant(&self) -> bool {
        self.lambda.iter().all(|&c| c >= 0)
    }

    /// Compares the `Λ` coordinates only.
    pub fn equal_mod_delta(&self, other: &AffineWeight) -> Result<bool, Error> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch(self.n(), other.n()));
        }
        Ok(self.lambda == other.lambda)
    }

    pub fn scale(&self, k: i64) -> Self {
        AffineWeight {
            lambda: self.lambda.iter().map(|c| c * k).collect(),
            delta: self.delta * k,
        }
    }

    pub fn classical(&self) -> Self {
        AffineWeight { lambda: self.lambda.clone(), delta: 0 }
    }
}

pub(crate) fn residue(i: i64, n: usize) -> usize {
    i.rem_euclid(n as i64) as usize
}

/// `wt(λ) = Λ_0 - Σ m_i α_i`.
pub fn weight_of(lambda: &Partition, n: usize) -> AffineWeight {
    let counts = lambda.residue_counts(n).counts;
    let mut w = AffineWeight::fundamental(n, 0);
    for (i, &m) in counts.iter().enumerate() {
        w = w - AffineWeight::simple_root(n, i).scale(m as i64);
    }
    w
}

/// `ε_i = Λ_{i+1} - Λ_i` with no `δ` component.
pub fn epsilon_step(n: usize, i: i64) -> AffineWeight {
    AffineWeight::fundamental(n, i + 1) - AffineWeight::fundamental(n, i)
}

/// Cartan matrix of finite sl(n), size `(n-1) × (n-1)`.
pub fn cartan_matrix(n: usize) -> Result<Vec<Vec<i64>>, Error> {
    check_rank(n)?;
    let r = n - 1;
    Ok((0..r)
        .map(|i| {
            (0..r)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect())
}

/// Inverse Cartan matrix of sl(n): entry `(i, j)` (1-based) is
/// `min(i, j) - ij/n`.
pub fn inverse_cartan(n: usize) -> Result<Vec<Vec<Ratio<i64>>>, Error> {
    check_rank(n)?;
    let nn = n as i64;
    Ok((1..n as i64)
        .map(|i| {
            (1..n as i64)
                .map(|j| Ratio::from_integer(i.min(j)) - Ratio::new(i * j, nn))
                .collect()
        })
        .collect())
}

impl Add for AffineWeight {
    type Output = AffineWeight;

    fn add(self, rhs: AffineWeight) -> AffineWeight {
        assert_eq!(self.n(), rhs.n(), "weights over different ranks");
        AffineWeight {
            lambda: self.lambda.iter().zip(&rhs.lambda).map(|(a, b)| a + b).collect(),
            delta: self.delta + rhs.delta,
        }
    }
}

impl Sub for AffineWeight {
    type Output = AffineWeight;

    fn sub(self, rhs: AffineWeight) -> AffineWeight {
        self + (-rhs)
    }
}

impl Neg for AffineWeight {
    type Output = AffineWeight;

    fn neg(self) -> AffineWeight {
        self.scale(-1)
    }
}

impl fmt::Display for AffineWeight {
    /// Renders e.g. `2*L0 - L1 + L2 - 3*d`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .lambda
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, format!("L{i}")))
            .chain(std::iter::once((self.delta, "d".to_string())))
            .filter(|(c, _)| *c != 0);
        let mut first = true;
        for (c, name) in terms {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            f.write_str(&name)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineWeight({self})")
    }
}
