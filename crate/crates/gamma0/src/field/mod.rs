//! Exact arithmetic in prime fields F_p (p >= 5) and extensions F_{p^k}.
//!
//! A [`Field`] is an immutable, cheaply clonable handle; elements are
//! coefficient vectors over F_p reduced modulo a monic irreducible modulus
//! polynomial (of degree 1 for the prime field itself).  The modulus is found
//! by deterministic search, so the same (p, k) always yields the same field
//! representation.  All enumeration-based operations are capped by the
//! field's enumeration limit (default 10^6 elements).

mod subfield;
mod unipoly;
mod units;

pub use subfield::Embedding;
pub use unipoly::UniPoly;

use std::fmt;
use std::sync::{Arc, OnceLock};

use smallvec::{smallvec, SmallVec};

use crate::error::Error;
use crate::Result;

/// Default cap on the size of fields that may be exhaustively enumerated.
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

/// Largest supported field size; p^k above this is rejected at construction.
const MAX_FIELD_SIZE: u64 = 1 << 62;

type Coeffs = SmallVec<[u64; 6]>;

/// An element of a finite field, stored as the coefficient vector of its
/// representative polynomial, constant term first, each coefficient reduced
/// into `[0, p)`.  Comparison is lexicographic on the coefficient vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement {
    coeffs: Coeffs,
}

impl FieldElement {
    /// Coefficient vector over F_p, constant term first; length is the
    /// extension degree of the parent field.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The element as an integer when it lies in the prime subfield,
    /// i.e. when all higher coefficients vanish.
    pub fn as_prime_value(&self) -> Option<u64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            write!(f, "{}", self.coeffs[0])
        } else {
            write!(f, "[")?;
            for (i, c) in self.coeffs.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, "]")
        }
    }
}

#[derive(Debug)]
struct FieldRepr {
    p: u64,
    k: u32,
    /// Coefficients c_0..c_{k-1} of the monic modulus x^k + c_{k-1}x^{k-1} + ... + c_0.
    modulus_tail: Vec<u64>,
    size: u64,
    enum_cap: u64,
    units: OnceLock<units::UnitGroup>,
    frobenius: OnceLock<Vec<Vec<u64>>>,
}

/// A finite field F_{p^k}, p >= 5 prime.  Immutable and cheap to clone;
/// two handles compare equal iff they have the same characteristic, degree
/// and modulus.
#[derive(Clone)]
pub struct Field(Arc<FieldRepr>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.k == other.0.k
                && self.0.modulus_tail == other.0.modulus_tail)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field(p={}, k={})", self.0.p, self.0.k)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{{{}^{}}}", self.0.p, self.0.k)
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    /// The prime field F_p.  Rejects composite p and the excluded
    /// characteristics 2 and 3.
    pub fn prime(p: u64) -> Result<Field> {
        if p == 2 || p == 3 {
            return Err(Error::SmallCharacteristic(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        // F_p is F_p[x]/(x): the monic modulus of degree 1 with least tail.
        Ok(Field(Arc::new(FieldRepr {
            p,
            k: 1,
            modulus_tail: vec![0],
            size: p,
            enum_cap: DEFAULT_ENUM_CAP,
            units: OnceLock::new(),
            frobenius: OnceLock::new(),
        })))
    }

    /// The extension F_{p^k}, with modulus the first irreducible monic
    /// polynomial of degree k in lexicographic coefficient order
    /// (constant term varying fastest... slowest; see `next_tail`).
    pub fn extension(p: u64, k: u32) -> Result<Field> {
        if k == 0 {
            return Err(Error::ConfigInvalid("extension degree must be >= 1".into()));
        }
        if k == 1 {
            return Field::prime(p);
        }
        let base = Field::prime(p)?;
        let size = (1..=k).try_fold(1u64, |acc, _| {
            acc.checked_mul(p).filter(|&s| s <= MAX_FIELD_SIZE)
        });
        let size = size.ok_or(Error::FieldTooLarge { p, k })?;
        let tail = find_irreducible_tail(&base, k);
        Ok(Field(Arc::new(FieldRepr {
            p,
            k,
            modulus_tail: tail,
            size,
            enum_cap: DEFAULT_ENUM_CAP,
            units: OnceLock::new(),
            frobenius: OnceLock::new(),
        })))
    }

    /// Same field with a different enumeration cap.
    pub fn with_enum_cap(&self, cap: u64) -> Field {
        Field(Arc::new(FieldRepr {
            p: self.0.p,
            k: self.0.k,
            modulus_tail: self.0.modulus_tail.clone(),
            size: self.0.size,
            enum_cap: cap,
            units: OnceLock::new(),
            frobenius: OnceLock::new(),
        }))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    /// Number of elements p^k.
    pub fn size(&self) -> u64 {
        self.0.size
    }

    pub fn enum_cap(&self) -> u64 {
        self.0.enum_cap
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.k == 1
    }

    /// Coefficients c_0..c_{k-1} of the monic modulus.
    pub fn modulus_tail(&self) -> &[u64] {
        &self.0.modulus_tail
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: smallvec![0; self.0.k as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    /// The image of an integer under Z -> F_p -> F_{p^k}.
    pub fn from_u64(&self, n: u64) -> FieldElement {
        let mut coeffs: Coeffs = smallvec![0; self.0.k as usize];
        coeffs[0] = n % self.0.p;
        FieldElement { coeffs }
    }

    /// The image of a signed integer.
    pub fn from_i64(&self, n: i64) -> FieldElement {
        let p = self.0.p as i64;
        self.from_u64(n.rem_euclid(p) as u64)
    }

    /// Element with the given coefficient vector (constant term first);
    /// shorter vectors are zero-padded, all entries reduced mod p.
    pub fn element(&self, coeffs: &[u64]) -> FieldElement {
        assert!(
            coeffs.len() <= self.0.k as usize,
            "coefficient vector longer than extension degree"
        );
        let mut c: Coeffs = smallvec![0; self.0.k as usize];
        for (i, &v) in coeffs.iter().enumerate() {
            c[i] = v % self.0.p;
        }
        FieldElement { coeffs: c }
    }

    /// The residue class of x, a generator of the field as an F_p-algebra.
    pub fn algebra_generator(&self) -> FieldElement {
        if self.0.k == 1 {
            self.zero()
        } else {
            self.element(&[0, 1])
        }
    }

    fn check_member(&self, a: &FieldElement) {
        debug_assert_eq!(
            a.coeffs.len(),
            self.0.k as usize,
            "element does not belong to {self}"
        );
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check_member(a);
        self.check_member(b);
        let p = self.0.p;
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| {
                let s = x + y;
                if s >= p {
                    s - p
                } else {
                    s
                }
            })
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        self.check_member(a);
        let p = self.0.p;
        let coeffs = a
            .coeffs
            .iter()
            .map(|&x| if x == 0 { 0 } else { p - x })
            .collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check_member(a);
        self.check_member(b);
        let p = self.0.p as u128;
        let k = self.0.k as usize;
        if k == 1 {
            let v = (a.coeffs[0] as u128 * b.coeffs[0] as u128 % p) as u64;
            return FieldElement {
                coeffs: smallvec![v],
            };
        }
        // Schoolbook product, then reduction by x^k = -(modulus tail).
        let mut buf: SmallVec<[u128; 11]> = smallvec![0u128; 2 * k - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let x = x as u128;
            for (j, &y) in b.coeffs.iter().enumerate() {
                buf[i + j] += x * y as u128;
            }
        }
        self.reduce(&mut buf);
        let coeffs = buf[..k].iter().map(|&c| c as u64).collect();
        FieldElement { coeffs }
    }

    /// Reduce a coefficient buffer of degree < 2k-1 modulo the field modulus,
    /// in place; on return `buf[..k]` holds the reduced coefficients, < p.
    fn reduce(&self, buf: &mut [u128]) {
        let p = self.0.p as u128;
        let k = self.0.k as usize;
        for i in (k..buf.len()).rev() {
            let c = buf[i] % p;
            buf[i] = 0;
            if c == 0 {
                continue;
            }
            // x^i = x^(i-k) * x^k = -x^(i-k) * tail
            for (j, &t) in self.0.modulus_tail.iter().enumerate() {
                if t != 0 {
                    let sub = c * t as u128 % p;
                    let idx = i - k + j;
                    buf[idx] = (buf[idx] + p - sub) % p;
                }
            }
        }
        for c in buf[..k].iter_mut() {
            *c %= p;
        }
    }

    pub fn square(&self, a: &FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    /// a^e by square-and-multiply.
    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.square(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        // a^(q-2) = a^-1 in F_q.
        Ok(self.pow(a, self.0.size - 2))
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// The Frobenius x -> x^p.
    pub fn frobenius(&self, a: &FieldElement) -> FieldElement {
        self.pow(a, self.0.p)
    }

    /// Smallest d dividing k with a in the subfield F_{p^d}.
    pub fn subfield_degree(&self, a: &FieldElement) -> u32 {
        let k = self.0.k;
        for d in 1..=k {
            if k % d != 0 {
                continue;
            }
            if self.pow(a, pow_u64(self.0.p, d)) == *a {
                return d;
            }
        }
        k
    }

    /// Decode the element with the given mixed-radix index, the inverse of
    /// the position of the element in lexicographic enumeration.
    pub fn element_from_index(&self, mut idx: u64) -> FieldElement {
        let p = self.0.p;
        let k = self.0.k as usize;
        let mut coeffs: Coeffs = smallvec![0; k];
        // Lexicographic order on (c_0, ..., c_{k-1}) means c_{k-1} varies fastest.
        for slot in (0..k).rev() {
            coeffs[slot] = idx % p;
            idx /= p;
        }
        FieldElement { coeffs }
    }

    /// Index of the element in lexicographic enumeration.
    pub fn element_index(&self, a: &FieldElement) -> u64 {
        self.check_member(a);
        let p = self.0.p;
        let mut idx = 0u64;
        for &c in &a.coeffs {
            idx = idx * p + c;
        }
        idx
    }

    /// All elements in lexicographic coefficient order.
    ///
    /// Panics when the field exceeds its enumeration cap; see
    /// `GAMMA0_MAX_FIELD` in the CLI.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        assert!(
            self.0.size <= self.0.enum_cap,
            "{self} has {} elements, beyond the enumeration cap {}",
            self.0.size,
            self.0.enum_cap
        );
        (0..self.0.size).map(|i| self.element_from_index(i))
    }

    /// Whether full enumeration is permitted for this field.
    pub fn enumerable(&self) -> bool {
        self.0.size <= self.0.enum_cap
    }

    pub(crate) fn repr_units(&self) -> &OnceLock<units::UnitGroup> {
        &self.0.units
    }

    pub(crate) fn repr_frobenius(&self) -> &OnceLock<Vec<Vec<u64>>> {
        &self.0.frobenius
    }
}

pub(crate) fn pow_u64(base: u64, exp: u32) -> u64 {
    base.checked_pow(exp).expect("field size overflow")
}

/// First tail (c_0, ..., c_{k-1}), in lexicographic order with c_{k-1}
/// varying fastest, making x^k + c_{k-1}x^{k-1} + ... + c_0 irreducible.
fn find_irreducible_tail(base: &Field, k: u32) -> Vec<u64> {
    let p = base.characteristic();
    let total = pow_u64(p, k);
    for idx in 0..total {
        let mut tail = vec![0u64; k as usize];
        let mut n = idx;
        for slot in (0..k as usize).rev() {
            tail[slot] = n % p;
            n /= p;
        }
        if unipoly::monic_is_irreducible(base, &tail) {
            return tail;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

#[cfg(test)]
mod tests;
