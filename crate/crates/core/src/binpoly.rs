//! Polynomials over Z₂.
//!
//! A [`BinPoly`] stores its coefficients as the bits of a `u128`, bit `i`
//! holding the coefficient of `X^i`. Addition is XOR and equality is bitwise,
//! so the representation is canonical. Degrees up to 127 are representable,
//! which is far beyond the field sizes this crate works with.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest representable exponent.
pub const MAX_DEGREE: u32 = 127;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinPoly(u128);

impl BinPoly {
    pub const ZERO: BinPoly = BinPoly(0);
    pub const ONE: BinPoly = BinPoly(1);
    pub const X: BinPoly = BinPoly(2);

    pub const fn from_bits(bits: u128) -> Self {
        BinPoly(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    /// `X^exp`. Panics if `exp` exceeds [`MAX_DEGREE`].
    pub fn monomial(exp: u32) -> Self {
        assert!(exp <= MAX_DEGREE, "exponent {exp} exceeds {MAX_DEGREE}");
        BinPoly(1u128 << exp)
    }

    /// Builds a polynomial from a list of exponents. Repeated exponents cancel.
    pub fn from_exponents<I: IntoIterator<Item = u32>>(exps: I) -> Self {
        exps.into_iter()
            .fold(BinPoly::ZERO, |acc, e| acc + BinPoly::monomial(e))
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Degree of the polynomial; `None` stands for the zero polynomial's
    /// degree of minus infinity.
    pub fn degree(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros())
        }
    }

    pub fn coeff(self, exp: u32) -> bool {
        exp <= MAX_DEGREE && (self.0 >> exp) & 1 == 1
    }

    /// Exponents with a nonzero coefficient, ascending.
    pub fn exponents(self) -> impl Iterator<Item = u32> {
        (0..=MAX_DEGREE).filter(move |&e| self.coeff(e))
    }

    /// Product over Z₂. Panics if the product degree exceeds [`MAX_DEGREE`].
    pub fn product(self, rhs: BinPoly) -> BinPoly {
        if let (Some(a), Some(b)) = (self.degree(), rhs.degree()) {
            assert!(
                a + b <= MAX_DEGREE,
                "product degree {} exceeds {MAX_DEGREE}",
                a + b
            );
        }
        let mut acc = 0u128;
        let mut b = rhs.0;
        let mut shifted = self.0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= shifted;
            }
            b >>= 1;
            shifted <<= 1;
        }
        BinPoly(acc)
    }

    /// Long division: returns `(quotient, remainder)` with
    /// `self = divisor * quotient + remainder` and `deg(remainder) < deg(divisor)`.
    pub fn divmod(self, divisor: BinPoly) -> Result<(BinPoly, BinPoly)> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut quot = 0u128;
        let mut rem = self.0;
        while let Some(r) = BinPoly(rem).degree() {
            if r < d {
                break;
            }
            let shift = r - d;
            quot |= 1u128 << shift;
            rem ^= divisor.0 << shift;
        }
        Ok((BinPoly(quot), BinPoly(rem)))
    }

    pub fn modulo(self, divisor: BinPoly) -> Result<BinPoly> {
        self.divmod(divisor).map(|(_, r)| r)
    }

    /// Exhaustive trial division by every polynomial of degree
    /// `1..=deg/2`. Errors on constants.
    pub fn is_irreducible(self) -> Result<bool> {
        let deg = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::ConstantPolynomial),
        };
        for dd in 1..=deg / 2 {
            for bits in (1u128 << dd)..(1u128 << (dd + 1)) {
                if self.modulo(BinPoly(bits))?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Parses `0x`-prefixed hexadecimal bit strings as well as the term
    /// grammar accepted by [`FromStr`].
    pub fn parse_hex(s: &str) -> Result<BinPoly> {
        let err = |reason: &str| Error::PolyParse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let digits = s
            .trim()
            .strip_prefix("0x")
            .or_else(|| s.trim().strip_prefix("0X"))
            .unwrap_or(s.trim());
        if digits.is_empty() {
            return Err(err("empty hex string"));
        }
        u128::from_str_radix(digits, 16)
            .map(BinPoly)
            .map_err(|_| err("not a hexadecimal number of at most 128 bits"))
    }

    pub fn to_hex(self) -> String {
        format!("{:#x}", self.0)
    }
}

/// Irreducible modulus used when none is given.
///
/// Degrees 2 through 5 use fixed choices (X³+X+1 for degree 3); larger
/// degrees take the numerically smallest irreducible of that degree.
pub fn default_modulus(k: u32) -> Result<BinPoly> {
    match k {
        2 => Ok(BinPoly(0b111)),
        3 => Ok(BinPoly(0b1011)),
        4 => Ok(BinPoly(0b1_0011)),
        5 => Ok(BinPoly(0b10_0101)),
        6..=10 => {
            let found = ((1u128 << k)..(1u128 << (k + 1)))
                .map(BinPoly)
                .find(|p| p.is_irreducible().unwrap_or(false));
            // Irreducibles exist in every degree.
            Ok(found.expect("an irreducible polynomial of every degree exists"))
        }
        _ => Err(Error::UnsupportedDegree(k)),
    }
}

impl Add for BinPoly {
    type Output = BinPoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: BinPoly) -> BinPoly {
        BinPoly(self.0 ^ rhs.0)
    }
}

impl Mul for BinPoly {
    type Output = BinPoly;
    fn mul(self, rhs: BinPoly) -> BinPoly {
        self.product(rhs)
    }
}

impl fmt::Display for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .collect::<Vec<_>>()
            .into_iter()
            .rev()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "X".to_string(),
                _ => format!("X^{e}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl fmt::Debug for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinPoly({self})")
    }
}

impl FromStr for BinPoly {
    type Err = Error;

    /// Accepts `"X^3+X+1"`-style sums of `X^<n>`, `X` and `1` terms, the
    /// literal `"0"`, or a `0x` hexadecimal bit string. Repeated terms are
    /// rejected rather than cancelled.
    fn from_str(s: &str) -> Result<BinPoly> {
        let trimmed = s.trim();
        if trimmed.starts_with("0x") || trimmed.starts_with("0X") {
            return BinPoly::parse_hex(trimmed);
        }
        if trimmed == "0" {
            return Ok(BinPoly::ZERO);
        }
        let err = |reason: String| Error::PolyParse {
            input: s.to_string(),
            reason,
        };
        let mut bits = 0u128;
        for term in trimmed.split('+') {
            let term = term.trim();
            let exp = match term {
                "1" => 0,
                "X" => 1,
                "" => return Err(err("empty term".into())),
                t => {
                    let e = t
                        .strip_prefix("X^")
                        .ok_or_else(|| err(format!("unrecognised term {t:?}")))?;
                    let e: u32 = e
                        .parse()
                        .map_err(|_| err(format!("bad exponent in {t:?}")))?;
                    if e > MAX_DEGREE {
                        return Err(err(format!("exponent {e} exceeds {MAX_DEGREE}")));
                    }
                    e
                }
            };
            if bits >> exp & 1 == 1 {
                return Err(err(format!("duplicate term X^{exp}")));
            }
            bits |= 1u128 << exp;
        }
        Ok(BinPoly(bits))
    }
}
