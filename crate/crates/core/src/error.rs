use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("rank must be at least 2, got {0}")]
    InvalidRank(usize),

    #[error("residue {residue} out of range for n = {n}")]
    ResidueOutOfRange { residue: usize, n: usize },

    #[error("weights over different ranks ({0} vs {1})")]
    RankMismatch(usize, usize),

    #[error("{core} is not a {n}-core")]
    NotACore { core: String, n: usize },

    /// No Jantzen-Seitz partition has this core.
    #[error("{core} is not a rectangle (k^l) with k + l <= {n}; no JS partition has this {n}-core")]
    NonRectangularCore { core: String, n: usize },

    #[error("need 0 <= s <= t < n, got s = {s}, t = {t}, n = {n}")]
    InvalidFermionicLabel { s: usize, t: usize, n: usize },

    #[error("non-integral exponent {exponent} at lattice point {point:?}")]
    NonIntegralExponent { exponent: String, point: Vec<usize> },

    #[error("series shift by {shift} would drop the nonzero coefficient {coefficient}")]
    NonzeroShiftedTerm { shift: usize, coefficient: String },
}

pub(crate) fn check_rank(n: usize) -> Result<(), Error> {
    if n < 2 {
        Err(Error::InvalidRank(n))
    } else {
        Ok(())
    }
}

pub(crate) fn check_residue(residue: usize, n: usize) -> Result<(), Error> {
    check_rank(n)?;
    if residue >= n {
        Err(Error::ResidueOutOfRange { residue, n })
    } else {
        Ok(())
    }
}
