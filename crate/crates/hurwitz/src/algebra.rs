//! The 14 Cayley-Dickson algebras `A(c)` of dimension 2, 4 and 8:
//! elements, metrics, multiplication, conjugations and norm forms,
//! all over exact rational scalars.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::{matrix, Error, Rat, Result};

/// Selects one of the 14 Cayley-Dickson algebras: the dimension
/// `2m` in {2, 4, 8} and the sign parameters `c = (c1[,c2[,c3]])`.
///
/// `A(-1)`, `A(-1,-1)` and `A(-1,-1,-1)` are the complex numbers,
/// the Hamilton quaternions and the Cayley octonions; the remaining
/// sign choices give their hyperbolic (split) variants.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraSignature {
    dim: usize,
    c: [i8; 3],
}

impl AlgebraSignature {
    /// Builds a signature. `c` must have length log2(dim): 1, 2 or 3
    /// entries for dim 2, 4, 8, every entry being +1 or -1.
    pub fn new(dim: usize, c: &[i8]) -> Result<Self> {
        let nc = match dim {
            2 => 1,
            4 => 2,
            8 => 3,
            _ => return Err(Error::InvalidInput("dim must be 2, 4 or 8")),
        };
        if c.len() != nc {
            return Err(Error::InvalidInput("c must have log2(dim) entries"));
        }
        if c.iter().any(|&ci| ci != 1 && ci != -1) {
            return Err(Error::InvalidInput("every c_i must be +1 or -1"));
        }
        let mut cs = [0i8; 3];
        cs[..nc].copy_from_slice(c);
        Ok(AlgebraSignature { dim, c: cs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Half-dimension `m`.
    pub fn m(&self) -> usize {
        self.dim / 2
    }

    /// The sign parameters (length 1, 2 or 3).
    pub fn c(&self) -> &[i8] {
        &self.c[..self.dim.trailing_zeros() as usize]
    }

    /// Product of the `c_i` selected by `mask` (bit 0 = c1, bit 1 = c2,
    /// bit 2 = c3). Entries of `H(u;c)` are signed monomials of this form.
    pub(crate) fn c_product(&self, mask: u8) -> i8 {
        let mut p = 1i8;
        for (i, &ci) in self.c().iter().enumerate() {
            if mask & (1 << i) != 0 {
                p *= ci;
            }
        }
        p
    }

    /// All 14 signatures: 2 of dimension 2, 4 of dimension 4, 8 of
    /// dimension 8.
    pub fn all() -> Vec<AlgebraSignature> {
        let mut out = Vec::with_capacity(14);
        for &dim in &[2usize, 4, 8] {
            let nc = dim.trailing_zeros() as usize;
            for bits in 0..(1u8 << nc) {
                let c: Vec<i8> = (0..nc)
                    .map(|i| if bits & (1 << i) != 0 { 1 } else { -1 })
                    .collect();
                out.push(AlgebraSignature::new(dim, &c).unwrap());
            }
        }
        out
    }

    pub fn metric(&self) -> Metric {
        Metric::of(self)
    }

    /// Compact means the metric `eta` is Euclidean; noncompact means
    /// split of signature 0.
    pub fn is_compact(&self) -> bool {
        self.metric().eta().iter().all(|&e| e == 1)
    }
}

/// The diagonal metrics of `A(c)`: `g` on the imaginary part and
/// `eta = 1 (+) g` on the whole algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Metric {
    g: Vec<i8>,
    eta: Vec<i8>,
}

impl Metric {
    fn of(sig: &AlgebraSignature) -> Metric {
        let c = sig.c();
        let c1 = c[0];
        let c2 = *c.get(1).unwrap_or(&1);
        let c3 = *c.get(2).unwrap_or(&1);
        let full = [
            -c1,
            -c2,
            c1 * c2,
            -c3,
            c1 * c3,
            c2 * c3,
            -c1 * c2 * c3,
        ];
        let g: Vec<i8> = full[..sig.dim() - 1].to_vec();
        let mut eta = vec![1i8];
        eta.extend_from_slice(&g);
        Metric { g, eta }
    }

    /// Diagonal of `g` (length dim - 1).
    pub fn g(&self) -> &[i8] {
        &self.g
    }

    /// Diagonal of `eta = 1 (+) g` (length dim).
    pub fn eta(&self) -> &[i8] {
        &self.eta
    }

    /// Sum of the `eta` entries: `dim` in the compact case, 0 in the
    /// split case.
    pub fn signature_sum(&self) -> i32 {
        self.eta.iter().map(|&e| e as i32).sum()
    }
}

/// A hypercomplex number: a vector of `dim` exact rational coefficients
/// `(u_0, ..., u_{2m-1})`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    coeffs: Vec<Rat>,
}

impl Element {
    pub fn new(coeffs: Vec<Rat>) -> Result<Self> {
        match coeffs.len() {
            2 | 4 | 8 => Ok(Element { coeffs }),
            n => Err(Error::DimensionMismatch { expected: 2, got: n }),
        }
    }

    pub fn from_ints(v: &[i64]) -> Result<Self> {
        Element::new(v.iter().map(|&x| Rat::from_integer(x.into())).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Element { coeffs: vec![Rat::zero(); dim] }
    }

    /// The multiplicative identity `(1, 0, ..., 0)`.
    pub fn one(dim: usize) -> Self {
        Element::basis(dim, 0)
    }

    /// The basis element `e_k` (`e_0 = 1`).
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); dim];
        coeffs[k] = Rat::one();
        Element { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, alpha: usize) -> &Rat {
        &self.coeffs[alpha]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, a: &Rat) -> Element {
        Element { coeffs: self.coeffs.iter().map(|x| x * a).collect() }
    }

    pub fn add(&self, other: &Element) -> Element {
        debug_assert_eq!(self.dim(), other.dim());
        Element {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Complex conjugation: `(u_0, -u_1, ..., -u_{2m-1})`.
    pub fn conjugate(&self) -> Element {
        let mut coeffs = self.coeffs.clone();
        for x in coeffs.iter_mut().skip(1) {
            *x = -x.clone();
        }
        Element { coeffs }
    }
}

/// Product `w = uv` in `A(c)`, via the matrix form `w = H(u;c) v`.
pub fn multiply(u: &Element, v: &Element, sig: &AlgebraSignature) -> Result<Element> {
    if u.dim() != sig.dim() {
        return Err(Error::DimensionMismatch { expected: sig.dim(), got: u.dim() });
    }
    if v.dim() != sig.dim() {
        return Err(Error::DimensionMismatch { expected: sig.dim(), got: v.dim() });
    }
    let h = matrix::hurwitz(u, sig)?;
    Element::new(h.mul_vec(v.coeffs()))
}

/// The norm form `u' eta u`.
pub fn norm_form(u: &Element, sig: &AlgebraSignature) -> Result<Rat> {
    if u.dim() != sig.dim() {
        return Err(Error::DimensionMismatch { expected: sig.dim(), got: u.dim() });
    }
    let eta = sig.metric();
    Ok(quad(eta.eta(), u.coeffs()))
}

pub(crate) fn quad(eta: &[i8], v: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (e, x) in eta.iter().zip(v) {
        let s = x * x;
        if *e == 1 {
            acc += s;
        } else {
            acc -= s;
        }
    }
    acc
}

/// The diagonal sign matrix `eps = diag(1, eps_1, ..., eps_{2m-1})`
/// selecting the hat-conjugation `u -> eps (.) u`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignVector {
    eps: Vec<i8>,
}

impl SignVector {
    /// `eps[0]` must be +1 and every entry +1 or -1.
    pub fn new(eps: Vec<i8>) -> Result<Self> {
        if !matches!(eps.len(), 2 | 4 | 8) {
            return Err(Error::DimensionMismatch { expected: 2, got: eps.len() });
        }
        if eps[0] != 1 {
            return Err(Error::InvalidInput("eps_0 must be +1"));
        }
        if eps.iter().any(|&e| e != 1 && e != -1) {
            return Err(Error::InvalidInput("every eps_k must be +1 or -1"));
        }
        Ok(SignVector { eps })
    }

    pub fn identity(dim: usize) -> Self {
        SignVector { eps: vec![1; dim] }
    }

    /// `j_0 = diag(1, -1, ..., -1)`, the complex conjugation of `A(c)`.
    pub fn conjugation(dim: usize) -> Self {
        let mut eps = vec![-1i8; dim];
        eps[0] = 1;
        SignVector { eps }
    }

    /// Bit `k-1` of `mask` set means `eps_k = -1`; masks enumerate all
    /// `2^{2m-1}` sign vectors of a given dimension.
    pub fn from_mask(dim: usize, mask: u8) -> Self {
        let mut eps = vec![1i8; dim];
        for k in 1..dim {
            if mask & (1 << (k - 1)) != 0 {
                eps[k] = -1;
            }
        }
        SignVector { eps }
    }

    pub fn dim(&self) -> usize {
        self.eps.len()
    }

    pub fn signs(&self) -> &[i8] {
        &self.eps
    }

    pub fn is_identity(&self) -> bool {
        self.eps.iter().all(|&e| e == 1)
    }

    /// Sum over `k >= 1` of `eps_k`.
    pub fn imaginary_sum(&self) -> i32 {
        self.eps.iter().skip(1).map(|&e| e as i32).sum()
    }

    /// Indices `k >= 1` with `eps_k = -1`.
    pub fn flipped(&self) -> Vec<usize> {
        (1..self.dim()).filter(|&k| self.eps[k] == -1).collect()
    }

    /// Componentwise application `eps (.) u`.
    pub fn apply(&self, u: &Element) -> Element {
        let coeffs = u
            .coeffs()
            .iter()
            .zip(&self.eps)
            .map(|(x, &e)| if e == 1 { x.clone() } else { -x.clone() })
            .collect();
        Element { coeffs }
    }

    /// Whether `u -> eps (.) u` reverses products: `hat(uv) = hat(v) hat(u)`
    /// checked exactly over all basis pairs (bilinearity covers the rest).
    pub fn is_anti_automorphism(&self, sig: &AlgebraSignature) -> bool {
        let dim = sig.dim();
        if self.dim() != dim {
            return false;
        }
        for i in 1..dim {
            for j in 1..dim {
                let ei = Element::basis(dim, i);
                let ej = Element::basis(dim, j);
                let prod = multiply(&ei, &ej, sig).unwrap();
                let lhs = self.apply(&prod);
                let rhs = multiply(&self.apply(&ej), &self.apply(&ei), sig).unwrap();
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// Every sign vector that is an anti-involution of `A(c)`, found by
/// exhaustive classification of the `2^{2m-1}` candidates. The identity
/// is excluded (it is the trivial automorphism, type A). The list has
/// `2m - delta(m,1)` entries: 1 for dim 2, 4 for dim 4, 8 for dim 8.
pub fn anti_involutions(sig: &AlgebraSignature) -> Vec<SignVector> {
    let dim = sig.dim();
    let mut out = Vec::new();
    for mask in 1..(1u16 << (dim - 1)) {
        let eps = SignVector::from_mask(dim, mask as u8);
        if eps.is_anti_automorphism(sig) {
            out.push(eps);
        }
    }
    out
}

/// Whether `u` lies on the null cone of a split algebra. Always false
/// for nonzero `u` in the compact case.
pub fn on_null_cone(u: &Element, sig: &AlgebraSignature) -> Result<bool> {
    Ok(norm_form(u, sig)?.is_zero())
}
