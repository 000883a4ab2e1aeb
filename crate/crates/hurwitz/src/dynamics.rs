//! Parameter algebra of the radial Schrodinger duality: the power-law
//! potential `-Z / rho^alpha` at energy `E` maps, under the dimension-2
//! type-A_N change of variable with `2N = alpha (N + 1)`, to the
//! potential `-(N+1)^2 E rho^{2N}` at eigenvalue `(N+1)^2 Z` — the
//! coupling constant and the energy trade places.

use alloc::vec::Vec;

use crate::{Error, Rat, Result};

/// The transformed spectral problem. No wavefunction is materialized;
/// only the parameter exchange is computed, exactly.
#[derive(Clone, PartialEq, Debug)]
pub struct DualityResult {
    pub alpha: Rat,
    pub power: i64,
    /// Exponent of the new potential: `2N`.
    pub new_potential_exponent: i64,
    /// Coefficient of the new potential: `-(N+1)^2 E`.
    pub new_potential_coefficient: Rat,
    /// The new eigenvalue: `(N+1)^2 Z`.
    pub new_eigenvalue: Rat,
    /// Whether coupling constant and energy actually trade places
    /// (false only in the trivial identity case `N = 0`).
    pub roles_swapped: bool,
}

/// An admissible exponent pair, with the trivial one flagged.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AdmissiblePair {
    pub alpha: i64,
    pub power: i64,
    pub trivial: bool,
}

/// All integer `alpha` in `[alpha_min, alpha_max]` admitting an
/// integer `N != -1` with `2N = alpha (N + 1)`, i.e.
/// `N = alpha / (2 - alpha)` — exactly `alpha` in `{0, 1, 3, 4}`
/// intersected with the range. `(0, 0)` is flagged trivial.
pub fn admissible_pairs(alpha_min: i64, alpha_max: i64) -> Result<Vec<AdmissiblePair>> {
    if alpha_min > alpha_max {
        return Err(Error::InvalidInput("empty exponent range"));
    }
    let mut out = Vec::new();
    for alpha in alpha_min..=alpha_max {
        if alpha == 2 {
            continue;
        }
        let d = 2 - alpha;
        if alpha % d != 0 {
            continue;
        }
        let n = alpha / d;
        if n == -1 {
            continue;
        }
        debug_assert_eq!(2 * n, alpha * (n + 1));
        out.push(AdmissiblePair { alpha, power: n, trivial: alpha == 0 && n == 0 });
    }
    Ok(out)
}

/// Applies the duality for a (possibly non-integer) exponent `alpha`
/// satisfying `2N - alpha (N + 1) = 0` with integer `N != -1`, coupling
/// `z` and energy `e`.
pub fn dualize(alpha: &Rat, power: i64, z: &Rat, e: &Rat) -> Result<DualityResult> {
    if power == -1 {
        return Err(Error::InadmissiblePair);
    }
    let lhs = Rat::from_integer((2 * power).into());
    let rhs = alpha * Rat::from_integer((power + 1).into());
    if lhs != rhs {
        return Err(Error::InadmissiblePair);
    }
    let np1sq = Rat::from_integer(((power + 1) * (power + 1)).into());
    Ok(DualityResult {
        alpha: alpha.clone(),
        power,
        new_potential_exponent: 2 * power,
        new_potential_coefficient: -(&np1sq * e),
        new_eigenvalue: &np1sq * z,
        roles_swapped: power != 0,
    })
}

/// Integer-exponent convenience wrapper.
pub fn dualize_int(alpha: i64, power: i64, z: &Rat, e: &Rat) -> Result<DualityResult> {
    dualize(&Rat::from_integer(alpha.into()), power, z, e)
}

/// Whether the reverse exponent is again integer-admissible: the new
/// potential has exponent `-(2N)`, and `alpha' = -2N` is admissible
/// only if `alpha'` lies in `{0, 1, 3, 4}`. For the Coulomb-oscillator
/// pair this fails (`alpha' = -2`), matching the one-directional
/// presentation.
pub fn reverse_admissible(result: &DualityResult) -> bool {
    let alpha_p = -result.new_potential_exponent;
    admissible_pairs(alpha_p, alpha_p).map(|v| !v.is_empty()).unwrap_or(false)
}
