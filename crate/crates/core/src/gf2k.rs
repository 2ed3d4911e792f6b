//! The field GF(2^k) realised as Z₂\[X\] modulo an irreducible polynomial.
//!
//! Elements are stored as `u32` bit patterns where bit `i` is the coefficient
//! of αⁱ, α being the residue class of `X`. Every element carries the context
//! it was created in, and mixing elements of different fields is an error.

use std::fmt;

use crate::binpoly::{default_modulus, BinPoly};
use crate::error::{Error, Result};

/// Supported field degrees. 2^16 players is already far past anything the
/// brute-force verifier can handle.
pub const MIN_K: u32 = 2;
pub const MAX_K: u32 = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldCtx {
    k: u32,
    modulus: BinPoly,
}

impl FieldCtx {
    /// Validates that `modulus` is irreducible of a supported degree.
    pub fn new(modulus: BinPoly) -> Result<Self> {
        let k = modulus.degree().unwrap_or(0);
        if !(MIN_K..=MAX_K).contains(&k) {
            return Err(Error::FieldDegree(k));
        }
        if !modulus.is_irreducible()? {
            return Err(Error::ReducibleModulus(modulus.to_string()));
        }
        Ok(FieldCtx { k, modulus })
    }

    pub fn with_default_modulus(k: u32) -> Result<Self> {
        FieldCtx::new(default_modulus(k)?)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> BinPoly {
        self.modulus
    }

    /// Number of elements, 2^k.
    pub fn order(&self) -> usize {
        1usize << self.k
    }

    pub fn elem(&self, bits: u32) -> Result<FieldElem> {
        if (bits as usize) >= self.order() {
            return Err(Error::ElementOutOfRange { bits, k: self.k });
        }
        Ok(FieldElem { ctx: *self, bits })
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            ctx: *self,
            bits: 0,
        }
    }

    pub fn one(&self) -> FieldElem {
        FieldElem {
            ctx: *self,
            bits: 1,
        }
    }

    /// The residue class of `X`.
    pub fn alpha(&self) -> FieldElem {
        FieldElem {
            ctx: *self,
            bits: 2,
        }
    }

    /// All 2^k elements in ascending bit order: 0, 1, α, α+1, α², ...
    pub fn all_elements(&self) -> Vec<FieldElem> {
        (0..self.order() as u32)
            .map(|bits| FieldElem { ctx: *self, bits })
            .collect()
    }

    /// Nonzero elements in ascending bit order.
    pub fn nonzero_elements(&self) -> Vec<FieldElem> {
        (1..self.order() as u32)
            .map(|bits| FieldElem { ctx: *self, bits })
            .collect()
    }

    /// Shift-and-add multiplication with reduction folded into each shift.
    pub(crate) fn mul_bits(&self, a: u32, b: u32) -> u32 {
        let top = 1u64 << self.k;
        let modulus = self.modulus.bits() as u64;
        let mut acc = 0u64;
        let mut a = a as u64;
        let mut b = b;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= modulus;
            }
        }
        acc as u32
    }

    /// Extended Euclid over Z₂\[X\]: maintains `s·a ≡ r (mod q)`.
    pub(crate) fn inv_bits(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::InverseOfZero);
        }
        let (mut r0, mut r1) = (self.modulus, BinPoly::from_bits(a as u128));
        let (mut s0, mut s1) = (BinPoly::ZERO, BinPoly::ONE);
        while !r1.is_zero() {
            let (q, r) = r0.divmod(r1)?;
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s0 + q * s1);
        }
        // q irreducible and a != 0 leaves gcd 1.
        debug_assert_eq!(r0, BinPoly::ONE);
        Ok(s0.modulo(self.modulus)?.bits() as u32)
    }

    /// Renders an element as a sum of powers of α, e.g. `α²+α+1`.
    pub fn format_bits(&self, bits: u32) -> String {
        if bits == 0 {
            return "0".to_string();
        }
        (0..self.k)
            .rev()
            .filter(|i| bits >> i & 1 == 1)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "α".to_string(),
                _ => format!("α{}", superscript(i)),
            })
            .collect::<Vec<_>>()
            .join("+")
    }
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldElem {
    ctx: FieldCtx,
    bits: u32,
}

impl FieldElem {
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    fn same_field(&self, other: &FieldElem) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Sum, which is also the difference in characteristic 2.
    pub fn add(&self, other: &FieldElem) -> Result<FieldElem> {
        self.same_field(other)?;
        Ok(FieldElem {
            ctx: self.ctx,
            bits: self.bits ^ other.bits,
        })
    }

    pub fn sub(&self, other: &FieldElem) -> Result<FieldElem> {
        self.add(other)
    }

    pub fn mul(&self, other: &FieldElem) -> Result<FieldElem> {
        self.same_field(other)?;
        Ok(FieldElem {
            ctx: self.ctx,
            bits: self.ctx.mul_bits(self.bits, other.bits),
        })
    }

    pub fn inv(&self) -> Result<FieldElem> {
        Ok(FieldElem {
            ctx: self.ctx,
            bits: self.ctx.inv_bits(self.bits)?,
        })
    }

    /// d(x): index of the highest nonzero coefficient. Undefined for zero.
    pub fn degree(&self) -> Result<u32> {
        if self.bits == 0 {
            Err(Error::DegreeOfZero)
        } else {
            Ok(31 - self.bits.leading_zeros())
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ctx.format_bits(self.bits))
    }
}
