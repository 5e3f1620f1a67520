//! Subfields of F_{p^k} as kernels of Frobenius powers, and embeddings
//! between compatible fields.
//!
//! The Frobenius x -> x^p is F_p-linear on F_{p^k}; the subfield F_{p^d}
//! (d | k) is the kernel of Frob^d - id, computed by Gaussian elimination
//! over F_p.  This recovers roots of small-degree polynomials inside fields
//! far beyond the enumeration cap, since each root of f with coefficients in
//! F_{p^c} lies in a subfield of degree at most c * deg(f).

use smallvec::smallvec;

use super::{pow_u64, Field, FieldElement};
use crate::error::Error;
use crate::Result;

impl Field {
    /// Matrix of the Frobenius x -> x^p in the basis 1, x, ..., x^(k-1),
    /// stored as columns.
    fn frobenius_matrix(&self) -> &Vec<Vec<u64>> {
        self.repr_frobenius().get_or_init(|| {
            let k = self.degree() as usize;
            let t = self.algebra_generator();
            let tp = self.frobenius(&t);
            let mut cols = Vec::with_capacity(k);
            let mut cur = self.one();
            for _ in 0..k {
                cols.push(cur.coeffs().to_vec());
                cur = self.mul(&cur, &tp);
            }
            cols
        })
    }

    /// All elements of the subfield F_{p^d}, d dividing k, in element order.
    ///
    /// Panics if d does not divide the extension degree or p^d exceeds the
    /// enumeration cap.
    pub fn subfield_elements(&self, d: u32) -> Vec<FieldElement> {
        let k = self.degree();
        assert!(d >= 1 && k % d == 0, "F_{{p^{d}}} is not a subfield");
        let sub_size = pow_u64(self.characteristic(), d);
        assert!(
            sub_size <= self.enum_cap(),
            "subfield of degree {d} exceeds the enumeration cap"
        );
        if d == k {
            return self.elements().collect();
        }
        let p = self.characteristic();
        let n = k as usize;
        // M = Frob^d - I, columns over F_p.
        let frob = self.frobenius_matrix().clone();
        let mut m = identity(n);
        for _ in 0..d {
            m = mat_mul(&frob, &m, p);
        }
        for (i, col) in m.iter_mut().enumerate() {
            col[i] = (col[i] + p - 1) % p;
        }
        let basis = kernel_basis(&m, p);
        debug_assert_eq!(basis.len(), d as usize);
        // Span of the kernel basis.
        let mut out = Vec::with_capacity(sub_size as usize);
        let mut counters = vec![0u64; basis.len()];
        loop {
            let mut coeffs = smallvec![0u64; n];
            for (c, b) in counters.iter().zip(&basis) {
                for (slot, &v) in b.iter().enumerate() {
                    coeffs[slot] = (coeffs[slot] + c * v) % p;
                }
            }
            out.push(FieldElement { coeffs });
            let mut i = 0;
            loop {
                if i == counters.len() {
                    out.sort();
                    return out;
                }
                counters[i] += 1;
                if counters[i] < p {
                    break;
                }
                counters[i] = 0;
                i += 1;
            }
        }
    }
}

fn identity(n: usize) -> Vec<Vec<u64>> {
    (0..n)
        .map(|i| {
            let mut col = vec![0; n];
            col[i] = 1;
            col
        })
        .collect()
}

/// Product of two column-major matrices over F_p.
fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    b.iter()
        .map(|bcol| {
            let mut out = vec![0u128; n];
            for (j, &bj) in bcol.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                for (i, &aij) in a[j].iter().enumerate() {
                    out[i] += aij as u128 * bj as u128;
                }
            }
            out.iter().map(|&v| (v % p as u128) as u64).collect()
        })
        .collect()
}

/// Basis of the kernel of a column-major matrix over F_p.
fn kernel_basis(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let ncols = m.len();
    let nrows = if ncols == 0 { 0 } else { m[0].len() };
    // Row-major working copy.
    let mut a: Vec<Vec<u64>> = (0..nrows)
        .map(|i| (0..ncols).map(|j| m[j][i]).collect())
        .collect();
    let inv = |x: u64| -> u64 {
        // p is prime and x != 0
        let mut acc = 1u64;
        let mut base = x % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = (acc as u128 * base as u128 % p as u128) as u64;
            }
            e >>= 1;
            base = (base as u128 * base as u128 % p as u128) as u64;
        }
        acc
    };
    let mut pivot_of_col = vec![None; ncols];
    let mut row = 0;
    for col in 0..ncols {
        let Some(pr) = (row..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, pr);
        let s = inv(a[row][col]);
        for v in a[row].iter_mut() {
            *v = (*v as u128 * s as u128 % p as u128) as u64;
        }
        for r in 0..nrows {
            if r != row && a[r][col] != 0 {
                let c = a[r][col];
                for j in 0..ncols {
                    let sub = c as u128 * a[row][j] as u128 % p as u128;
                    a[r][j] = ((a[r][j] as u128 + p as u128 - sub) % p as u128) as u64;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
        if row == nrows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (col, pr) in pivot_of_col.iter().enumerate() {
            if let Some(r) = pr {
                // pivot col value = -(entry at free column)
                v[col] = (p - a[*r][free]) % p;
            }
        }
        basis.push(v);
    }
    basis
}

/// The canonical embedding of a smaller field into a compatible larger one:
/// the algebra generator of the source is sent to the least root of the
/// source modulus in the target.
#[derive(Clone, Debug)]
pub struct Embedding {
    from: Field,
    to: Field,
    image_of_gen: FieldElement,
}

impl Embedding {
    /// Requires equal characteristic and source degree dividing target
    /// degree.
    pub fn new(from: &Field, to: &Field) -> Result<Embedding> {
        if from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0 {
            return Err(Error::ConfigInvalid(format!(
                "{from} does not embed into {to}"
            )));
        }
        if from == to {
            return Ok(Embedding {
                from: from.clone(),
                to: to.clone(),
                image_of_gen: to.algebra_generator(),
            });
        }
        // Roots of the source modulus in the target field.
        let mut tail: Vec<FieldElement> = from
            .modulus_tail()
            .iter()
            .map(|&c| to.from_u64(c))
            .collect();
        tail.push(to.one());
        let modulus = super::UniPoly::new(to.clone(), tail);
        let image = modulus
            .roots()
            .into_iter()
            .map(|(r, _)| r)
            .min()
            .expect("an irreducible polynomial splits in any field containing its root field");
        Ok(Embedding {
            from: from.clone(),
            to: to.clone(),
            image_of_gen: image,
        })
    }

    pub fn source(&self) -> &Field {
        &self.from
    }

    pub fn target(&self) -> &Field {
        &self.to
    }

    /// Image of an element: its representative polynomial evaluated at the
    /// chosen root of the source modulus.
    pub fn map(&self, a: &FieldElement) -> FieldElement {
        let to = &self.to;
        let mut acc = to.zero();
        for &c in a.coeffs().iter().rev() {
            acc = to.mul(&acc, &self.image_of_gen);
            acc = to.add(&acc, &to.from_u64(c));
        }
        acc
    }
}
