//! Integer solution families of the Diophantine equations attached to
//! the quadratic and degree-(N+1) transformations: the three generic
//! dimension-8 equations, their dimension-4 and dimension-2
//! restrictions, the Pythagorean specialization, and the
//! `A^2 - c1 B^2 = C^{N+1}` family.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{multiply, norm_form, AlgebraSignature, Element, SignVector};
use crate::transform::{quadratic_forms, TransformSpec};
use crate::{Error, Int, Rat, Result};

/// The shipped solution families. The `Dim4` variants restrict the
/// dimension-8 equations by dropping the `c3` terms (seed components
/// 4..7 set to zero); `Eq43` further drops `c2`. `Eq41` is the
/// Pythagorean case `A^2 + B^2 + C^2 = F^2`; `Eq46` is its
/// substitution instance `A^2 + 2B^2 = F^2`; `Eq47` is the
/// nonquadratic family `A^2 - c1 B^2 = C^{N+1}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyId {
    Eq38,
    Eq38Dim4,
    Eq43,
    Eq39,
    Eq39Dim4,
    Eq40,
    Eq41,
    Eq46,
    Eq47,
}

impl FamilyId {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::Eq38 => "EQ38",
            FamilyId::Eq38Dim4 => "EQ38_DIM4",
            FamilyId::Eq43 => "EQ43",
            FamilyId::Eq39 => "EQ39",
            FamilyId::Eq39Dim4 => "EQ39_DIM4",
            FamilyId::Eq40 => "EQ40",
            FamilyId::Eq41 => "EQ41",
            FamilyId::Eq46 => "EQ46",
            FamilyId::Eq47 => "EQ47",
        }
    }

    pub fn parse(s: &str) -> Option<FamilyId> {
        Some(match s {
            "EQ38" => FamilyId::Eq38,
            "EQ38_DIM4" => FamilyId::Eq38Dim4,
            "EQ43" | "EQ38_DIM2" => FamilyId::Eq43,
            "EQ39" => FamilyId::Eq39,
            "EQ39_DIM4" => FamilyId::Eq39Dim4,
            "EQ40" => FamilyId::Eq40,
            "EQ41" => FamilyId::Eq41,
            "EQ46" => FamilyId::Eq46,
            "EQ47" => FamilyId::Eq47,
        _ => return None,
        })
    }
}

/// A solution family instance: the equation, its sign parameters and
/// (for the nonquadratic family) the power `N >= 2`.
#[derive(Clone, Debug)]
pub struct DiophantineFamily {
    id: FamilyId,
    c: Vec<i8>,
    power: i64,
}

impl DiophantineFamily {
    /// `c` length must match the family (3 for the dimension-8
    /// equations, 2 for the `Dim4` restrictions, 1 for `Eq43`/`Eq47`,
    /// 0 for the fixed-sign `Eq41`/`Eq46`); `power` is only read by
    /// `Eq47` and must then be at least 2.
    pub fn new(id: FamilyId, c: &[i8], power: i64) -> Result<Self> {
        let need = match id {
            FamilyId::Eq38 | FamilyId::Eq39 | FamilyId::Eq40 => 3,
            FamilyId::Eq38Dim4 | FamilyId::Eq39Dim4 => 2,
            FamilyId::Eq43 | FamilyId::Eq47 => 1,
            FamilyId::Eq41 | FamilyId::Eq46 => 0,
        };
        if c.len() != need {
            return Err(Error::InvalidInput("wrong number of sign parameters"));
        }
        if c.iter().any(|&ci| ci != 1 && ci != -1) {
            return Err(Error::InvalidInput("every c_i must be +1 or -1"));
        }
        if id == FamilyId::Eq47 && power < 2 {
            return Err(Error::InvalidInput("the C^{N+1} family needs N >= 2"));
        }
        Ok(DiophantineFamily { id, c: c.to_vec(), power })
    }

    pub fn id(&self) -> FamilyId {
        self.id
    }

    pub fn c(&self) -> &[i8] {
        &self.c
    }

    pub fn power(&self) -> i64 {
        self.power
    }

    /// Tuple length: 9, 5, 3, 6, 4, 8, 4, 3, 3 in declaration order.
    pub fn arity(&self) -> usize {
        match self.id {
            FamilyId::Eq38 => 9,
            FamilyId::Eq38Dim4 => 5,
            FamilyId::Eq43 => 3,
            FamilyId::Eq39 => 6,
            FamilyId::Eq39Dim4 => 4,
            FamilyId::Eq40 => 8,
            FamilyId::Eq41 => 4,
            FamilyId::Eq46 => 3,
            FamilyId::Eq47 => 3,
        }
    }

    /// Seed vector length.
    pub fn seed_dim(&self) -> usize {
        match self.id {
            FamilyId::Eq38 | FamilyId::Eq39 | FamilyId::Eq40 => 8,
            FamilyId::Eq38Dim4 | FamilyId::Eq39Dim4 | FamilyId::Eq41 => 4,
            FamilyId::Eq43 | FamilyId::Eq46 | FamilyId::Eq47 => 2,
        }
    }

    /// Whether every tuple component is homogeneous of degree 2 in the
    /// seed (all families except the degree-(N+1) one), so that the
    /// equation is preserved by dividing the tuple by a common factor.
    pub fn uniform_degree_two(&self) -> bool {
        self.id != FamilyId::Eq47
    }

    /// The quadratic-transform spec whose surviving components, plus
    /// the norm form, produce the tuple. `None` for the direct-formula
    /// families `Eq46` and `Eq47`.
    fn spec(&self) -> Option<TransformSpec> {
        let (sig, eps) = match self.id {
            FamilyId::Eq38 => (
                AlgebraSignature::new(8, &self.c).unwrap(),
                SignVector::identity(8),
            ),
            FamilyId::Eq38Dim4 => (
                AlgebraSignature::new(4, &self.c).unwrap(),
                SignVector::identity(4),
            ),
            FamilyId::Eq43 => (
                AlgebraSignature::new(2, &self.c).unwrap(),
                SignVector::identity(2),
            ),
            FamilyId::Eq39 => (
                AlgebraSignature::new(8, &self.c).unwrap(),
                SignVector::new(vec![1, -1, 1, 1, 1, 1, -1, -1]).unwrap(),
            ),
            FamilyId::Eq39Dim4 => (
                AlgebraSignature::new(4, &self.c).unwrap(),
                SignVector::new(vec![1, -1, 1, 1]).unwrap(),
            ),
            FamilyId::Eq41 => (
                AlgebraSignature::new(4, &[-1, -1]).unwrap(),
                SignVector::new(vec![1, -1, 1, 1]).unwrap(),
            ),
            FamilyId::Eq40 => (
                AlgebraSignature::new(8, &self.c).unwrap(),
                SignVector::new(vec![1, -1, -1, -1, -1, -1, 1, 1]).unwrap(),
            ),
            FamilyId::Eq46 | FamilyId::Eq47 => return None,
        };
        Some(TransformSpec::new(1, sig, eps).unwrap())
    }

    /// The signs `s_i` of the equation `sum_i s_i X_i^2 = RHS`, over
    /// the tuple components before the right-hand-side one.
    fn lhs_signs(&self) -> Vec<i8> {
        let c1 = *self.c.first().unwrap_or(&-1);
        let c2 = *self.c.get(1).unwrap_or(&-1);
        let c3 = *self.c.get(2).unwrap_or(&-1);
        match self.id {
            FamilyId::Eq38 => vec![
                1,
                -c1,
                -c2,
                c1 * c2,
                -c3,
                c1 * c3,
                c2 * c3,
                -c1 * c2 * c3,
            ],
            FamilyId::Eq38Dim4 => vec![1, -c1, -c2, c1 * c2],
            FamilyId::Eq43 => vec![1, -c1],
            FamilyId::Eq39 => vec![1, -c2, c1 * c2, -c3, c1 * c3],
            FamilyId::Eq39Dim4 => vec![1, -c2, c1 * c2],
            FamilyId::Eq41 => vec![1, 1, 1],
            FamilyId::Eq40 => vec![1, -c2, c1 * c2, -c3, c1 * c3, c2 * c3, -c1 * c2 * c3],
            FamilyId::Eq46 => vec![1, 2],
            FamilyId::Eq47 => vec![1, -c1],
        }
    }
}

/// One verified integer solution and the seed it came from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolutionTuple {
    pub values: Vec<Int>,
    pub seed: Vec<Int>,
    pub primitive: bool,
}

fn is_primitive(values: &[Int]) -> bool {
    tuple_gcd(values).is_one()
}

fn tuple_gcd(values: &[Int]) -> Int {
    values.iter().fold(Int::zero(), |g, v| g.gcd(v))
}

/// Evaluates the family's tuple at an integer seed, exactly. The
/// quadratic families read off the surviving components of the matched
/// transform followed by the norm form; `Eq46` and `Eq47` use their
/// printed formulas directly.
pub fn solution_from_seed(family: &DiophantineFamily, u: &[Int]) -> Result<SolutionTuple> {
    if u.len() != family.seed_dim() {
        return Err(Error::DimensionMismatch { expected: family.seed_dim(), got: u.len() });
    }
    let values = match family.id {
        FamilyId::Eq46 => {
            // A = u0^2 - 2 u2^2, B = 2 u0 u2, F = u0^2 + 2 u2^2
            let (u0, u2) = (&u[0], &u[1]);
            let two = Int::from(2);
            vec![
                u0 * u0 - &two * u2 * u2,
                &two * u0 * u2,
                u0 * u0 + &two * u2 * u2,
            ]
        }
        FamilyId::Eq47 => {
            // (A, B) = [[u0, c1 u1], [u1, u0]]^N (u0, u1)', C = u0^2 - c1 u1^2
            let c1 = Int::from(family.c[0]);
            let (u0, u1) = (&u[0], &u[1]);
            let (mut a, mut b) = (u0.clone(), u1.clone());
            for _ in 0..family.power {
                let na = u0 * &a + &c1 * u1 * &b;
                let nb = u1 * &a + u0 * &b;
                a = na;
                b = nb;
            }
            let c = u0 * u0 - &c1 * u1 * u1;
            vec![a, b, c]
        }
        _ => {
            let spec = family.spec().unwrap();
            let forms = quadratic_forms(&spec)?;
            let mut values: Vec<Int> = forms
                .surviving()
                .into_iter()
                .map(|alpha| {
                    let m = &forms.forms()[alpha];
                    let mut acc = Int::zero();
                    for b in 0..m.size() {
                        for g in 0..m.size() {
                            let coef = m.get(b, g);
                            if coef != 0 {
                                acc += &u[b] * &u[g] * Int::from(coef);
                            }
                        }
                    }
                    acc
                })
                .collect();
            // right-hand-side component: the norm form u' eta u
            let eta = spec.sig().metric().eta().to_vec();
            let mut r = Int::zero();
            for (e, x) in eta.iter().zip(u) {
                let s = x * x;
                if *e == 1 {
                    r += s;
                } else {
                    r -= s;
                }
            }
            values.push(r);
            values
        }
    };
    debug_assert_eq!(values.len(), family.arity());
    let primitive = is_primitive(&values);
    let tuple = SolutionTuple { values, seed: u.to_vec(), primitive };
    debug_assert!(verify(family, &tuple.values).unwrap_or(false));
    Ok(tuple)
}

/// Exact check of the family's equation on an arbitrary tuple.
pub fn verify(family: &DiophantineFamily, values: &[Int]) -> Result<bool> {
    if values.len() != family.arity() {
        return Err(Error::ArityMismatch { expected: family.arity(), got: values.len() });
    }
    let signs = family.lhs_signs();
    let mut lhs = Int::zero();
    for (s, v) in signs.iter().zip(values) {
        lhs += Int::from(*s) * v * v;
    }
    let rhs_var = values.last().unwrap();
    let rhs = if family.id == FamilyId::Eq47 {
        num_traits::pow::pow(rhs_var.clone(), (family.power + 1) as usize)
    } else {
        rhs_var * rhs_var
    };
    Ok(lhs == rhs)
}

/// Linear seed restrictions, the mechanism behind deriving new
/// equations from old ones (`Eq46` arises from the Pythagorean family
/// under `u1 = 0`, `u2 = u3`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeedConstraint {
    Zero(usize),
    Equal(usize, usize),
}

impl SeedConstraint {
    fn holds(&self, u: &[Int]) -> bool {
        match *self {
            SeedConstraint::Zero(i) => u[i].is_zero(),
            SeedConstraint::Equal(i, j) => u[i] == u[j],
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct GenerateOptions {
    pub primitive_only: bool,
    pub dedupe: bool,
}

/// Sign-quotient canonical key: componentwise absolute value, except
/// that the right-hand-side component of the degree-(N+1) family keeps
/// its sign when the exponent `N + 1` is odd.
pub fn canonical_key(family: &DiophantineFamily, values: &[Int]) -> Vec<Int> {
    let keep_last_sign = family.id == FamilyId::Eq47 && (family.power + 1) % 2 != 0;
    values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            if keep_last_sign && i == values.len() - 1 {
                v.clone()
            } else {
                v.abs()
            }
        })
        .collect()
}

/// Enumerates seeds in `[-bound, bound]^{seed_dim}` lexicographically,
/// maps each through [`solution_from_seed`], re-verifies, and applies
/// the requested primitivity reduction, dedupe and canonical sort.
/// `constraints` restrict the seed set before mapping. Output order is
/// deterministic: sorted by canonical key.
pub fn generate(
    family: &DiophantineFamily,
    bound: i64,
    options: GenerateOptions,
    constraints: &[SeedConstraint],
) -> Result<Vec<SolutionTuple>> {
    if bound < 0 {
        return Err(Error::InvalidInput("bound must be non-negative"));
    }
    let dim = family.seed_dim();
    let width = 2 * bound as usize + 1;
    let total = width.checked_pow(dim as u32).ok_or(Error::InvalidInput("bound too large"))?;
    let mut out: Vec<(Vec<Int>, SolutionTuple)> = Vec::new();
    let mut seen: Vec<Vec<Int>> = Vec::new();
    'seeds: for idx in 0..total {
        let mut rem = idx;
        let mut u = Vec::with_capacity(dim);
        for _ in 0..dim {
            u.push(Int::from(rem % width) - Int::from(bound));
            rem /= width;
        }
        u.reverse();
        for con in constraints {
            if !con.holds(&u) {
                continue 'seeds;
            }
        }
        let mut tuple = solution_from_seed(family, &u)?;
        if !verify(family, &tuple.values)? {
            return Err(Error::IdentityViolation("generated tuple failed verification"));
        }
        if options.primitive_only {
            let g = tuple_gcd(&tuple.values);
            if g.is_zero() {
                continue; // the all-zero tuple
            }
            if family.uniform_degree_two() {
                if !g.is_one() {
                    for v in tuple.values.iter_mut() {
                        *v /= &g;
                    }
                    tuple.primitive = true;
                }
            } else if !g.is_one() {
                continue;
            }
        }
        let key = canonical_key(family, &tuple.values);
        if options.dedupe {
            if seen.binary_search(&key).is_ok() {
                continue;
            }
            let pos = seen.binary_search(&key).unwrap_err();
            seen.insert(pos, key.clone());
        }
        out.push((key, tuple));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.seed.cmp(&b.1.seed)));
    Ok(out.into_iter().map(|(_, t)| t).collect())
}

/// The composition identity behind the whole construction:
/// `w = H(u;c) v` satisfies `w' eta w = (u' eta u)(v' eta v)` exactly,
/// in both the compact and the split cases. Returns the three scalars.
pub fn composition_identity(
    u: &Element,
    v: &Element,
    sig: &AlgebraSignature,
) -> Result<(Rat, Rat, Rat)> {
    let w = multiply(u, v, sig)?;
    let wn = norm_form(&w, sig)?;
    let un = norm_form(u, sig)?;
    let vn = norm_form(v, sig)?;
    if wn != &un * &vn {
        return Err(Error::IdentityViolation("w' eta w != (u' eta u)(v' eta v)"));
    }
    Ok((wn, un, vn))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn pythagorean_example() {
        let fam = DiophantineFamily::new(FamilyId::Eq41, &[], 1).unwrap();
        let t = solution_from_seed(&fam, &ints(&[2, 0, 1, 0])).unwrap();
        assert_eq!(t.values, ints(&[3, 4, 0, 5]));
        assert!(verify(&fam, &t.values).unwrap());
        assert!(!verify(&fam, &ints(&[1, 1, 1, 2])).unwrap());
    }

    #[test]
    fn dim2_restriction_example() {
        let fam = DiophantineFamily::new(FamilyId::Eq43, &[-1], 1).unwrap();
        let t = solution_from_seed(&fam, &ints(&[2, 1])).unwrap();
        // A = u0^2 + c1 u1^2 = 3, B = 4, I = u0^2 - c1 u1^2 = 5
        assert_eq!(t.values, ints(&[3, 4, 5]));
        let fam_pos = DiophantineFamily::new(FamilyId::Eq43, &[1], 1).unwrap();
        let t = solution_from_seed(&fam_pos, &ints(&[2, 1])).unwrap();
        assert_eq!(t.values, ints(&[5, 4, 3]));
    }

    #[test]
    fn substitution_instance() {
        let fam = DiophantineFamily::new(FamilyId::Eq46, &[], 1).unwrap();
        let t = solution_from_seed(&fam, &ints(&[3, 1])).unwrap();
        assert_eq!(t.values, ints(&[7, 6, 11]));
        // 49 + 2*36 = 121
        assert!(verify(&fam, &t.values).unwrap());
    }

    #[test]
    fn degree_n_plus_one_family() {
        let fam = DiophantineFamily::new(FamilyId::Eq47, &[-1], 2).unwrap();
        let t = solution_from_seed(&fam, &ints(&[1, 1])).unwrap();
        assert_eq!(t.values, ints(&[-2, 2, 2]));
        assert!(verify(&fam, &t.values).unwrap()); // 4 + 4 = 2^3
    }

    #[test]
    fn generation_finds_the_345_triple() {
        let fam = DiophantineFamily::new(FamilyId::Eq41, &[], 1).unwrap();
        let opts = GenerateOptions { primitive_only: true, dedupe: true };
        let sols = generate(&fam, 2, opts, &[]).unwrap();
        assert!(sols.iter().any(|t| t.values == ints(&[3, 4, 0, 5])));
        for t in &sols {
            assert!(t.primitive);
            assert!(verify(&fam, &t.values).unwrap());
        }
    }

    #[test]
    fn generation_at_bound_zero() {
        let fam = DiophantineFamily::new(FamilyId::Eq43, &[1], 1).unwrap();
        let all = generate(&fam, 0, GenerateOptions::default(), &[]).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all[0].values.iter().all(Zero::is_zero));
        let prim = generate(
            &fam,
            0,
            GenerateOptions { primitive_only: true, dedupe: false },
            &[],
        )
        .unwrap();
        assert!(prim.is_empty());
    }

    #[test]
    fn constraints_reproduce_the_substitution() {
        // u1 = 0, u2 = u3 inside the Pythagorean family gives tuples
        // matching the A^2 + 2B^2 = F^2 instance
        let py = DiophantineFamily::new(FamilyId::Eq41, &[], 1).unwrap();
        let cons = [SeedConstraint::Zero(1), SeedConstraint::Equal(2, 3)];
        let sols = generate(&py, 3, GenerateOptions::default(), &cons).unwrap();
        let sub = DiophantineFamily::new(FamilyId::Eq46, &[], 1).unwrap();
        for t in &sols {
            let direct =
                solution_from_seed(&sub, &[t.seed[0].clone(), t.seed[2].clone()]).unwrap();
            // A and F agree; B and C of the quadruple merge into B
            assert_eq!(t.values[0], direct.values[0]);
            assert_eq!(t.values[3], direct.values[2]);
        }
    }

    #[test]
    fn composition_identity_examples() {
        // (1+2i)(3+i) = 1+7i: 5 * 10 = 50
        let sig = AlgebraSignature::new(2, &[-1]).unwrap();
        let u = Element::from_ints(&[1, 2]).unwrap();
        let v = Element::from_ints(&[3, 1]).unwrap();
        let (wn, un, vn) = composition_identity(&u, &v, &sig).unwrap();
        assert_eq!(wn, Rat::from_integer(50.into()));
        assert_eq!(un * vn, Rat::from_integer(50.into()));

        let sig = AlgebraSignature::new(8, &[1, -1, 1]).unwrap();
        let u = Element::from_ints(&[1, -2, 3, 0, 4, 1, -1, 2]).unwrap();
        let v = Element::from_ints(&[2, 1, 0, -3, 1, 1, 5, -2]).unwrap();
        composition_identity(&u, &v, &sig).unwrap();
    }
}
