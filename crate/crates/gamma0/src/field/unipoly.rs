//! Univariate polynomials over a finite field: arithmetic, gcd, modular
//! powering, irreducibility of monic polynomials, and exhaustive or
//! subfield-structured root extraction.

use num_bigint::BigUint;
use num_traits::Zero;

use super::{Field, FieldElement};

/// A polynomial over a [`Field`], coefficients stored constant term first
/// with no trailing zeros; the zero polynomial has an empty vector.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl std::fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl UniPoly {
    pub fn new(field: Field, mut coeffs: Vec<FieldElement>) -> UniPoly {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: Field) -> UniPoly {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    /// Polynomial with the given integer coefficients, constant term first.
    pub fn from_i64(field: &Field, coeffs: &[i64]) -> UniPoly {
        let cs = coeffs.iter().map(|&c| field.from_i64(c)).collect();
        UniPoly::new(field.clone(), cs)
    }

    /// The monomial x.
    pub fn x(field: &Field) -> UniPoly {
        UniPoly::new(field.clone(), vec![field.zero(), field.one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let f = &self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
            let b = other.coeffs.get(i).cloned().unwrap_or_else(|| f.zero());
            out.push(f.add(&a, &b));
        }
        UniPoly::new(f.clone(), out)
    }

    pub fn neg(&self) -> UniPoly {
        let f = &self.field;
        UniPoly::new(f.clone(), self.coeffs.iter().map(|c| f.neg(c)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(f.clone());
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        UniPoly::new(f.clone(), out)
    }

    pub fn scale(&self, c: &FieldElement) -> UniPoly {
        let f = &self.field;
        UniPoly::new(f.clone(), self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let f = &self.field;
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = f
            .inv(divisor.leading().unwrap())
            .expect("leading coefficient is a unit");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); rem.len().saturating_sub(d)];
        while rem.len() > d {
            let top = rem.len() - 1;
            let c = f.mul(&rem[top], &lead_inv);
            if !c.is_zero() {
                quot[top - d] = c.clone();
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    let t = f.mul(&c, dc);
                    rem[top - d + i] = f.sub(&rem[top - d + i], &t);
                }
            }
            rem.pop();
            while rem.last().is_some_and(FieldElement::is_zero) && rem.len() > d {
                rem.pop();
            }
        }
        while rem.last().is_some_and(FieldElement::is_zero) {
            rem.pop();
        }
        (UniPoly::new(f.clone(), quot), UniPoly::new(f.clone(), rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = self.field.inv(l).unwrap();
                self.scale(&inv)
            }
        }
    }

    /// self^e mod m.
    pub fn powmod(&self, e: u64, m: &UniPoly) -> UniPoly {
        self.powmod_big(&BigUint::from(e), m)
    }

    /// self^e mod m with an arbitrary-precision exponent.
    pub fn powmod_big(&self, e: &BigUint, m: &UniPoly) -> UniPoly {
        let f = &self.field;
        let mut acc = UniPoly::from_i64(f, &[1]);
        if e.is_zero() {
            return acc;
        }
        let base = self.divrem(m).1;
        let bits = e.bits();
        for i in (0..bits).rev() {
            acc = acc.mul(&acc).divrem(m).1;
            if e.bit(i) {
                acc = acc.mul(&base).divrem(m).1;
            }
        }
        acc
    }
}

/// Whether the monic polynomial x^k + tail is irreducible over the prime
/// field.  Degrees 2 and 3 reduce to root absence; higher degrees use the
/// Frobenius criterion: x^(p^k) = x mod f, and gcd(x^(p^(k/l)) - x, f) = 1
/// for every prime l dividing k.
pub(super) fn monic_is_irreducible(base: &Field, tail: &[u64]) -> bool {
    let k = tail.len() as u32;
    let mut coeffs: Vec<FieldElement> = tail.iter().map(|&c| base.from_u64(c)).collect();
    coeffs.push(base.one());
    let f = UniPoly::new(base.clone(), coeffs);
    if k <= 3 {
        return (0..base.characteristic()).all(|r| !f.eval(&base.from_u64(r)).is_zero());
    }
    let x = UniPoly::x(base);
    let q = BigUint::from(base.characteristic()).pow(k);
    if x.powmod_big(&q, &f) != x.divrem(&f).1 {
        return false;
    }
    for l in prime_divisors(k as u64) {
        let qi = BigUint::from(base.characteristic()).pow(k / l as u32);
        let xqi = x.powmod_big(&qi, &f);
        let g = xqi.sub(&x).gcd(&f);
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl UniPoly {
    /// Number of distinct roots in the coefficient field, as the degree of
    /// gcd(f, x^q - x), computed without enumerating the field.
    pub fn count_distinct_roots(&self) -> usize {
        let f = &self.field;
        if self.degree().is_none_or(|d| d == 0) {
            return 0;
        }
        let x = UniPoly::x(f);
        let xq = x.powmod(f.size(), self);
        let g = xq.sub(&x).gcd(self);
        g.degree().unwrap_or(0)
    }

    /// All roots in the coefficient field with multiplicities, sorted by
    /// the field's element order.
    ///
    /// Small fields are searched exhaustively.  Fields beyond the
    /// enumeration cap are handled through proper subfields: every root of a
    /// polynomial whose coefficients lie in F_{p^d} generates an extension
    /// of F_{p^d} of degree at most deg(f), so the roots are recovered by
    /// scanning the (small) candidate subfields.  The root count is verified
    /// against gcd(f, x^q - x) in either case.
    ///
    /// Panics when the polynomial is zero, or when a root provably lies
    /// outside every enumerable subfield.
    pub fn roots(&self) -> Vec<(FieldElement, usize)> {
        assert!(!self.is_zero(), "the zero polynomial vanishes everywhere");
        let f = &self.field;
        if self.degree() == Some(0) {
            return Vec::new();
        }
        let expected = self.count_distinct_roots();
        let mut distinct: Vec<FieldElement> = if f.enumerable() {
            f.elements().filter(|x| self.eval(x).is_zero()).collect()
        } else {
            self.roots_via_subfields(expected)
        };
        distinct.sort();
        assert_eq!(
            distinct.len(),
            expected,
            "root search missed roots of {self:?} over {f}"
        );
        let mut out = Vec::with_capacity(distinct.len());
        for r in distinct {
            let lin = UniPoly::new(
                f.clone(),
                vec![f.neg(&r), f.one()],
            );
            let mut m = 0;
            let mut cur = self.clone();
            loop {
                let (q, rem) = cur.divrem(&lin);
                if !rem.is_zero() {
                    break;
                }
                m += 1;
                cur = q;
                if cur.is_zero() {
                    break;
                }
            }
            out.push((r, m));
        }
        out
    }

    /// Distinct roots of self when they must lie in enumerable subfields.
    fn roots_via_subfields(&self, expected: usize) -> Vec<FieldElement> {
        let f = &self.field;
        let deg = self.degree().unwrap() as u32;
        let coeff_degree = self
            .coeffs
            .iter()
            .map(|c| f.subfield_degree(c))
            .fold(1u64, |acc, d| num_integer::lcm(acc, d as u64))
            as u32;
        let mut found = Vec::new();
        for d in 1..=f.degree() {
            if f.degree() % d != 0 {
                continue;
            }
            // Roots generate extensions of F_{p^c} of degree <= deg(f).
            if d > coeff_degree * deg {
                continue;
            }
            let size = super::pow_u64(f.characteristic(), d);
            assert!(
                size <= f.enum_cap(),
                "roots of {self:?} over {f} may lie in F_{{{}^{}}}, beyond the enumeration cap",
                f.characteristic(),
                d
            );
            for x in f.subfield_elements(d) {
                if self.eval(&x).is_zero() && !found.contains(&x) {
                    found.push(x);
                }
            }
            if found.len() == expected {
                break;
            }
        }
        found
    }
}
