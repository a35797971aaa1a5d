#![doc = include_str!("../../../book/src/bound-family.md")]

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::Error;

/// A validated member `(alpha, beta)` of the parameter set
/// `S = {(alpha, beta) : alpha > 0, beta >= 0}`.
///
/// The pair selects the bound family member
/// `f(d, n) = (n - d)^(log2(beta + d/alpha))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundParams {
    alpha: u64,
    beta: u64,
}

impl BoundParams {
    /// Validates raw integers as a member of `S`.
    pub fn new(alpha: i64, beta: i64) -> Result<Self, Error> {
        if alpha <= 0 || beta < 0 {
            return Err(Error::InvalidParams { alpha, beta });
        }
        Ok(BoundParams {
            alpha: alpha as u64,
            beta: beta as u64,
        })
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    /// The exact base `beta + d/alpha = (alpha*beta + d) / alpha` of the
    /// transposed power form, in lowest terms.
    pub fn exponent_base(&self, d: u64) -> BigRational {
        BigRational::new(
            BigInt::from(self.alpha * self.beta + d),
            BigInt::from(self.alpha),
        )
    }

    /// Exact integer test of `beta + l/alpha > 2`, i.e. the exponent
    /// `log2(beta + d/alpha)` exceeds 1 for every `d >= l`.
    ///
    /// The base is nondecreasing in `d`, so a true result at `l` extends to
    /// all larger dimensions.
    pub fn is_superlinear_at(&self, l: u64) -> bool {
        self.alpha * self.beta + l > 2 * self.alpha
    }

    /// Base-case window width `2^(2*alpha + 1)`, or `None` when it does not
    /// fit in a `u64`.
    pub fn window_width(&self) -> Option<u64> {
        let shift = 2 * self.alpha + 1;
        if shift >= 64 {
            None
        } else {
            Some(1u64 << shift)
        }
    }
}

/// The symbolic value `m^(log2 q)` with `m = n - d` and `q` the exact base.
///
/// Never materialized as a float: consumers route every comparison through
/// the rigorous comparators in [`crate::compare`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundValue {
    m: BigUint,
    q: BigRational,
}

impl BoundValue {
    /// The value `f(d, n)` for the given parameters, as the pair `(n - d, base(d))`.
    pub fn new(params: &BoundParams, d: u64, n: u64) -> Result<Self, Error> {
        if n < d {
            return Err(Error::OutOfRange {
                what: "bound value requires n >= d",
            });
        }
        Ok(BoundValue {
            m: BigUint::from(n - d),
            q: params.exponent_base(d),
        })
    }

    pub fn m(&self) -> &BigUint {
        &self.m
    }

    pub fn base(&self) -> &BigRational {
        &self.q
    }
}

/// The exact integer `2^(d-3) * n`, an upper bound on the diameter of any
/// `d`-dimensional polyhedron with `n` facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LarmanValue {
    d: u64,
    n: u64,
    value: BigUint,
}

impl LarmanValue {
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }
}

/// Computes the generalized Larman bound `2^(d-3) * n` exactly.
///
/// Requires `d >= 3` and `n >= d`.
pub fn larman_value(d: u64, n: u64) -> LarmanValue {
    assert!(d >= 3, "larman bound requires d >= 3");
    assert!(n >= d, "larman bound requires n >= d");
    LarmanValue {
        d,
        n,
        value: BigUint::from(n) << (d - 3),
    }
}
