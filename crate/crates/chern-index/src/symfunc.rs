//! Truncated symmetric-function engine for Chern characters.
//!
//! Characters live in the rational cohomology of `BSL_n` truncated above
//! complex degree 3, with the first Chern class eliminated at the type level:
//! `H^*(BSL_n; Q) = Q[c_2, ..., c_n]` has no degree-1 generator, so a
//! character is the triple (rank, coefficient of `c_2`, coefficient of
//! `c_3`). The conversion between monomial symmetric functions and the
//! `c_i` basis is a fixed table validated against a brute-force polynomial
//! oracle in the tests.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::binomial;
use crate::error::{Error, Result};

/// Coefficients of the monomial symmetric functions of degree 2 and 3:
/// `m2 = sum t_a^2`, `m11 = sum_{a<b} t_a t_b`, `m3 = sum t_a^3`,
/// `m21 = sum_{a!=b} t_a^2 t_b`, `m111 = sum_{a<b<c} t_a t_b t_c`.
///
/// Degree-1 data is omitted: any `m1` contribution is a multiple of the
/// first Chern class, which vanishes on `BSL_n`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MonomialSymCoeffs {
    pub m2: BigRational,
    pub m11: BigRational,
    pub m3: BigRational,
    pub m21: BigRational,
    pub m111: BigRational,
}

/// A Chern character truncated above complex degree 3, with `c_1 = 0`
/// already imposed: `deg0 + deg2 * c_2 + deg3 * c_3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChCoefficients {
    pub deg0: BigRational,
    pub deg2: BigRational,
    pub deg3: BigRational,
}

/// Exact integer Chern data `(rank, C_2, C_3)` of a virtual representation
/// pulled back to `H^*(BSL_n; Z)`.
///
/// Integrality is a theorem for honest representations; a non-integral
/// conversion is reported as an internal error, never a user error.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChernData {
    pub rank: BigInt,
    pub c2: BigInt,
    pub c3: BigInt,
}

impl ChernData {
    pub fn zero() -> Self {
        ChernData {
            rank: BigInt::zero(),
            c2: BigInt::zero(),
            c3: BigInt::zero(),
        }
    }

    pub fn add_scaled(&mut self, other: &ChernData, coeff: &BigInt) {
        self.rank += coeff * &other.rank;
        self.c2 += coeff * &other.c2;
        self.c3 += coeff * &other.c3;
    }
}

impl std::fmt::Display for ChernData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.rank, self.c2, self.c3)
    }
}

fn rat(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

fn rat_div(n: BigInt, d: i64) -> BigRational {
    BigRational::new(n, BigInt::from(d))
}

/// Converts monomial symmetric coefficients to the Chern basis with
/// `c_1 = 0` imposed: `m2 -> -2 c_2`, `m11 -> c_2`, `m3 -> 3 c_3`,
/// `m21 -> -3 c_3`, `m111 -> c_3`.
///
/// The table is stated for at least 3 variables. With fewer variables the
/// corresponding elementary symmetric polynomials vanish identically
/// (`e_3 = 0` for `num_vars < 3`, `e_2 = 0` for `num_vars < 2`), so those
/// slots are zero. `deg0` is not part of the conversion; callers attach the
/// rank separately.
pub fn monomials_to_chern_basis(num_vars: u64, m: &MonomialSymCoeffs) -> ChCoefficients {
    let deg2 = if num_vars >= 2 {
        &m.m11 - rat(BigInt::from(2)) * &m.m2
    } else {
        BigRational::zero()
    };
    let deg3 = if num_vars >= 3 {
        rat(BigInt::from(3)) * &m.m3 - rat(BigInt::from(3)) * &m.m21 + &m.m111
    } else {
        BigRational::zero()
    };
    ChCoefficients {
        deg0: BigRational::zero(),
        deg2,
        deg3,
    }
}

/// Chern character of the i-th elementary symmetric representation
/// (i-th exterior power of the standard representation of `SL_n`),
/// computed through the splitting-principle expansion.
pub fn ch_elementary(n: u64, i: u64) -> Result<ChCoefficients> {
    if i < 1 || i + 1 > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        });
    }
    let n_i = n as i64;
    let i_i = i as i64;
    let m = MonomialSymCoeffs {
        m2: rat_div(binomial(n_i - 1, i_i - 1), 2),
        m11: rat(binomial(n_i - 2, i_i - 2)),
        m3: rat_div(binomial(n_i - 1, i_i - 1), 6),
        m21: rat_div(binomial(n_i - 2, i_i - 2), 2),
        m111: rat(binomial(n_i - 3, i_i - 3)),
    };
    let mut ch = monomials_to_chern_basis(n, &m);
    ch.deg0 = rat(binomial(n_i, i_i));
    Ok(ch)
}

/// Chern character of the power sum `p_j = sum t_a^j`: each Chern root
/// contributes `exp(j t_a)`.
pub fn ch_power_sum(n: u64, j: u64) -> Result<ChCoefficients> {
    if j < 1 {
        return Err(Error::InvalidParams(
            "power sum exponent must be at least 1".into(),
        ));
    }
    let jb = BigInt::from(j);
    let m = MonomialSymCoeffs {
        m2: rat_div(&jb * &jb, 2),
        m3: rat_div(&jb * &jb * &jb, 6),
        ..MonomialSymCoeffs::default()
    };
    let mut ch = monomials_to_chern_basis(n, &m);
    ch.deg0 = rat(BigInt::from(n));
    Ok(ch)
}

/// Chern character of a monomial `prod_{alpha in parts} e_alpha`, as the
/// truncated product of the characters of its elementary factors.
pub fn ch_monomial(n: u64, parts: &[u64]) -> Result<ChCoefficients> {
    let mut acc = ChCoefficients::unit();
    for &alpha in parts {
        acc = acc.product(&ch_elementary(n, alpha)?);
    }
    Ok(acc)
}

impl ChCoefficients {
    pub fn zero() -> Self {
        ChCoefficients {
            deg0: BigRational::zero(),
            deg2: BigRational::zero(),
            deg3: BigRational::zero(),
        }
    }

    /// Multiplicative identity (the trivial one-dimensional character).
    pub fn unit() -> Self {
        ChCoefficients {
            deg0: BigRational::one(),
            deg2: BigRational::zero(),
            deg3: BigRational::zero(),
        }
    }

    pub fn add(&self, other: &ChCoefficients) -> ChCoefficients {
        ChCoefficients {
            deg0: &self.deg0 + &other.deg0,
            deg2: &self.deg2 + &other.deg2,
            deg3: &self.deg3 + &other.deg3,
        }
    }

    pub fn sub(&self, other: &ChCoefficients) -> ChCoefficients {
        ChCoefficients {
            deg0: &self.deg0 - &other.deg0,
            deg2: &self.deg2 - &other.deg2,
            deg3: &self.deg3 - &other.deg3,
        }
    }

    pub fn scale(&self, coeff: &BigRational) -> ChCoefficients {
        ChCoefficients {
            deg0: coeff * &self.deg0,
            deg2: coeff * &self.deg2,
            deg3: coeff * &self.deg3,
        }
    }

    /// Degreewise truncated product. The degree 1 x 2 cross terms vanish
    /// because the first Chern class is identically zero here.
    pub fn product(&self, other: &ChCoefficients) -> ChCoefficients {
        ChCoefficients {
            deg0: &self.deg0 * &other.deg0,
            deg2: &self.deg0 * &other.deg2 + &self.deg2 * &other.deg0,
            deg3: &self.deg0 * &other.deg3 + &self.deg3 * &other.deg0,
        }
    }

    /// Reads off integer Chern data via `ch = rank - C_2 + (1/2) C_3 + ...`:
    /// `(rank, C_2, C_3) = (deg0, -deg2, 2 deg3)`.
    pub fn to_chern(&self) -> Result<ChernData> {
        let two_deg3 = rat(BigInt::from(2)) * &self.deg3;
        for (label, value) in [("rank", &self.deg0), ("c2", &self.deg2), ("c3", &two_deg3)] {
            if !value.is_integer() {
                return Err(Error::IntegralityViolation {
                    context: format!("to_chern ({label})"),
                    value: value.to_string(),
                });
            }
        }
        Ok(ChernData {
            rank: self.deg0.to_integer(),
            c2: -self.deg2.to_integer(),
            c3: two_deg3.to_integer(),
        })
    }
}
