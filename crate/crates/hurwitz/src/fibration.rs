//! Geometric classification of the quadratic transformations: the
//! fibration and Lie-algebra data attached to each class, shipped as a
//! static table (the Lie algebras are not recomputed here).

use alloc::format;
use alloc::string::{String, ToString};

use crate::algebra::{AlgebraSignature, SignVector};
use crate::transform::{classify, quadratic_forms, TransformSpec, TransformType};
use crate::{Error, Result};

/// Compactness class keying the tabulated rows: the metric is either
/// Euclidean (compact) or split, and in the split case the fiber may
/// still be compact or not.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CompactnessClass {
    Compact,
    NoncompactCompactFiber,
    NoncompactNoncompactFiber,
}

/// One classified case: the fibration (up to homeomorphisms) and,
/// where tabulated, the symplectic ambient algebra `L`, the constraint
/// Lie algebra `L0` and the Lie algebra under constraints `L1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FibrationInfo {
    pub name: String,
    pub fiber: String,
    pub base: String,
    pub compactness: CompactnessClass,
    pub l: Option<&'static str>,
    pub l0: Option<&'static str>,
    pub l1: Option<&'static str>,
}

/// A row of the static table for the `R^{2m} -> R^{m+1-delta(m,1)}`
/// transformations of type B1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Table1Row {
    pub dim: usize,
    pub class: CompactnessClass,
    pub mapping: &'static str,
    pub fibration: &'static str,
    pub fiber: &'static str,
    pub base: &'static str,
    pub l: &'static str,
    pub l0: &'static str,
    pub l1: &'static str,
}

/// The eight tabulated rows, keyed by (dim, compactness class).
pub const TABLE1: [Table1Row; 8] = [
    Table1Row {
        dim: 2,
        class: CompactnessClass::Compact,
        mapping: "R^2 -> R",
        fibration: "S^1 -> {1}",
        fiber: "S^1",
        base: "{1}",
        l: "sp(4,R)",
        l0: "so(2)",
        l1: "so(2,1)",
    },
    Table1Row {
        dim: 2,
        class: CompactnessClass::NoncompactNoncompactFiber,
        mapping: "R^2 -> R",
        fibration: "R -> {1}",
        fiber: "R",
        base: "{1}",
        l: "sp(4,R)",
        l0: "so(1,1)",
        l1: "so(2,1)",
    },
    Table1Row {
        dim: 4,
        class: CompactnessClass::Compact,
        mapping: "R^4 -> R^3",
        fibration: "S^3 -> S^2",
        fiber: "S^1",
        base: "S^2",
        l: "sp(8,R)",
        l0: "so(2)",
        l1: "so(4,2)",
    },
    Table1Row {
        dim: 4,
        class: CompactnessClass::NoncompactCompactFiber,
        mapping: "R^4 -> R^3",
        fibration: "R^2 x S^1 -> R^2",
        fiber: "S^1",
        base: "R^2",
        l: "sp(8,R)",
        l0: "so(2)",
        l1: "so(4,2)",
    },
    Table1Row {
        dim: 4,
        class: CompactnessClass::NoncompactNoncompactFiber,
        mapping: "R^4 -> R^3",
        fibration: "R^2 x S^1 -> R x S^1",
        fiber: "R",
        base: "R x S^1",
        l: "sp(8,R)",
        l0: "so(1,1)",
        l1: "so(3,3)",
    },
    Table1Row {
        dim: 8,
        class: CompactnessClass::Compact,
        mapping: "R^8 -> R^5",
        fibration: "S^7 -> S^4",
        fiber: "S^3",
        base: "S^4",
        l: "sp(16,R)",
        l0: "so(3)",
        l1: "so(6,2)",
    },
    Table1Row {
        dim: 8,
        class: CompactnessClass::NoncompactCompactFiber,
        mapping: "R^8 -> R^5",
        fibration: "R^4 x S^3 -> R^4",
        fiber: "S^3",
        base: "R^4",
        l: "sp(16,R)",
        l0: "so(3)",
        l1: "so(6,2)",
    },
    Table1Row {
        dim: 8,
        class: CompactnessClass::NoncompactNoncompactFiber,
        mapping: "R^8 -> R^5",
        fibration: "R^4 x S^3 -> R^2 x S^2",
        fiber: "R^2 x S^1",
        base: "R^2 x S^2",
        l: "sp(16,R)",
        l0: "so(2,1)",
        l1: "so(4,4)",
    },
];

/// Looks up a tabulated row. Dim 2 has no split-metric row with a
/// compact fiber.
pub fn table1_row(dim: usize, class: CompactnessClass) -> Option<&'static Table1Row> {
    TABLE1.iter().find(|r| r.dim == dim && r.class == class)
}

impl From<&Table1Row> for FibrationInfo {
    fn from(r: &Table1Row) -> FibrationInfo {
        FibrationInfo {
            name: r.fibration.to_string(),
            fiber: r.fiber.to_string(),
            base: r.base.to_string(),
            compactness: r.class,
            l: Some(r.l),
            l0: Some(r.l0),
            l1: Some(r.l1),
        }
    }
}

/// For the split-metric cases the fiber is compact exactly when the
/// metric restricted to the unit coordinate plus the constraint
/// directions is positive definite (the fiber lives on the unit
/// quadric of that subalgebra).
fn fiber_class(sig: &AlgebraSignature, vanishing: &[usize]) -> CompactnessClass {
    if sig.is_compact() {
        return CompactnessClass::Compact;
    }
    let eta = sig.metric().eta().to_vec();
    let definite = vanishing.iter().all(|&k| eta[k] == 1);
    if definite {
        CompactnessClass::NoncompactCompactFiber
    } else {
        CompactnessClass::NoncompactNoncompactFiber
    }
}

fn sphere(k: usize) -> String {
    format!("S^{k}")
}

fn hyperboloid(m: usize) -> String {
    format!("H^{}({m},{m})", 2 * m - 1)
}

/// Resolves the fibration data of a quadratic spec. Classified cases:
/// type A (any dim), type B with `j_0` or `j_k`, and type C on dim 8
/// with one vanishing component.
pub fn fibration(spec: &TransformSpec) -> Result<FibrationInfo> {
    if spec.power() != 1 {
        return Err(Error::UnclassifiedSpec);
    }
    let sig = spec.sig();
    let dim = sig.dim();
    let m = sig.m();
    let compact = sig.is_compact();
    let forms = quadratic_forms(spec)?;
    match classify(sig, spec.eps()) {
        TransformType::A => {
            let (total, base) = if compact {
                (sphere(dim - 1), format!("RP^{}", dim - 1))
            } else {
                (hyperboloid(m), format!("{}/Z_2", hyperboloid(m)))
            };
            Ok(FibrationInfo {
                name: format!("{total} -> {base}"),
                fiber: "Z_2".to_string(),
                base,
                compactness: if compact {
                    CompactnessClass::Compact
                } else {
                    fiber_class(sig, &[])
                },
                l: None,
                l0: None,
                l1: None,
            })
        }
        TransformType::B { j_index } => {
            if dim == 2 {
                // j_0 coincides with j_1; the tabulated rows apply
                let class = fiber_class(sig, forms.vanishing());
                return Ok(table1_row(2, class).ok_or(Error::UnclassifiedSpec)?.into());
            }
            if j_index == 0 {
                let (total, fiber) = if compact {
                    (sphere(dim - 1), sphere(dim - 1))
                } else {
                    (hyperboloid(m), format!("R^{m} x {}", sphere(m - 1)))
                };
                return Ok(FibrationInfo {
                    name: format!("{total} -> {{1}}"),
                    fiber,
                    base: "{1}".to_string(),
                    compactness: fiber_class(sig, forms.vanishing()),
                    l: None,
                    l0: None,
                    l1: None,
                });
            }
            let class = fiber_class(sig, forms.vanishing());
            Ok(table1_row(dim, class).ok_or(Error::UnclassifiedSpec)?.into())
        }
        TransformType::C => {
            if dim != 8 || forms.n() != 1 {
                return Err(Error::UnclassifiedSpec);
            }
            let c = sig.c();
            let csum: i32 = c.iter().map(|&x| x as i32).sum();
            if csum == -3 {
                Ok(FibrationInfo {
                    name: "S^7 -> CP^3".to_string(),
                    fiber: "S^1".to_string(),
                    base: "CP^3".to_string(),
                    compactness: CompactnessClass::Compact,
                    l: None,
                    l0: None,
                    l1: None,
                })
            } else {
                let class = fiber_class(sig, forms.vanishing());
                let (name, fiber, base) = match class {
                    CompactnessClass::NoncompactCompactFiber => {
                        ("R^4 x S^3 -> R^4 x S^2", "S^1", "R^4 x S^2")
                    }
                    _ => ("R^4 x S^3 -> R^3 x S^3", "R", "R^3 x S^3"),
                };
                Ok(FibrationInfo {
                    name: name.to_string(),
                    fiber: fiber.to_string(),
                    base: base.to_string(),
                    compactness: class,
                    l: None,
                    l0: None,
                    l1: None,
                })
            }
        }
    }
}

/// Validates that an eps/signature pair is one of the classified
/// fibration cases without building the info.
pub fn is_classified(sig: &AlgebraSignature, eps: &SignVector) -> bool {
    TransformSpec::new(1, *sig, eps.clone())
        .ok()
        .and_then(|s| fibration(&s).ok())
        .is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::{named, NamedTransform};
    use alloc::vec;

    #[test]
    fn eight_rows_retrievable() {
        let keys = [
            (2, CompactnessClass::Compact),
            (2, CompactnessClass::NoncompactNoncompactFiber),
            (4, CompactnessClass::Compact),
            (4, CompactnessClass::NoncompactCompactFiber),
            (4, CompactnessClass::NoncompactNoncompactFiber),
            (8, CompactnessClass::Compact),
            (8, CompactnessClass::NoncompactCompactFiber),
            (8, CompactnessClass::NoncompactNoncompactFiber),
        ];
        for (dim, class) in keys {
            assert!(table1_row(dim, class).is_some());
        }
        assert!(table1_row(2, CompactnessClass::NoncompactCompactFiber).is_none());
    }

    #[test]
    fn kustaanheimo_stiefel_row() {
        let info = fibration(&named(NamedTransform::KustaanheimoStiefel)).unwrap();
        assert_eq!(info.name, "S^3 -> S^2");
        assert_eq!(info.fiber, "S^1");
        assert_eq!(info.l, Some("sp(8,R)"));
        assert_eq!(info.l0, Some("so(2)"));
        assert_eq!(info.l1, Some("so(4,2)"));
    }

    #[test]
    fn iwai_and_lambert_kibler_rows() {
        let iwai = fibration(&named(NamedTransform::Iwai)).unwrap();
        assert_eq!(iwai.compactness, CompactnessClass::NoncompactCompactFiber);
        assert_eq!(iwai.fiber, "S^1");
        assert_eq!(iwai.l0, Some("so(2)"));

        let lk = fibration(&named(NamedTransform::LambertKibler { both_positive: false })).unwrap();
        assert_eq!(lk.compactness, CompactnessClass::NoncompactNoncompactFiber);
        assert_eq!(lk.fiber, "R");
        assert_eq!(lk.l0, Some("so(1,1)"));
        assert_eq!(lk.l1, Some("so(3,3)"));
    }

    #[test]
    fn dim8_b1_and_c1_cases() {
        let sig = AlgebraSignature::new(8, &[-1, -1, -1]).unwrap();
        let eq20 = SignVector::new(vec![1, -1, 1, 1, 1, 1, -1, -1]).unwrap();
        let info = fibration(&TransformSpec::new(1, sig, eq20).unwrap()).unwrap();
        assert_eq!(info.name, "S^7 -> S^4");
        assert_eq!(info.fiber, "S^3");
        assert_eq!(info.l0, Some("so(3)"));
        assert_eq!(info.l1, Some("so(6,2)"));

        let eq25 = SignVector::new(vec![1, -1, -1, -1, -1, -1, 1, 1]).unwrap();
        let hopf = fibration(&TransformSpec::new(1, sig, eq25).unwrap()).unwrap();
        assert_eq!(hopf.name, "S^7 -> CP^3");
        assert_eq!(hopf.fiber, "S^1");
    }

    #[test]
    fn unclassified_cases_error() {
        // nonquadratic specs are not classified
        let fock = named(NamedTransform::Fock);
        assert_eq!(fibration(&fock), Err(Error::UnclassifiedSpec));
    }
}
