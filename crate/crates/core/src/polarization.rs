//! Flag types of the symplectic resolutions `T*(G/P) -> closure(O)`.
//!
//! Type A: the flag types are exactly the orderings of the dual partition
//! (`ord(p) = d` characterizes them), and every one of them resolves the
//! closure.
//!
//! Types B/C/D: polarization types correspond to Spaltenstein fiber
//! elements `(e, q)`; a flag type is a palindrome `(p_1..p_k, q, p_k..p_1)`
//! whose `ord` is `e`. Among the fiber elements, only the dominance-minimal
//! one yields birational moment maps — the others cover the closure with
//! degree 2 or more (the flag `(1,2,1)` over `O_{[2,2]}` in `sp_4` already
//! has a two-point generic fiber). The fiber is totally ordered by
//! dominance, so the minimal element is well defined; the swap moves never
//! change `e`, which is also what makes the resulting resolution graph
//! connected.
//!
//! In `so_{2k}` with middle entry 0 the flag contains a maximal isotropic
//! subspace; the isotropic Grassmannian has two components, so each
//! ordering appears with a `+` and a `-` label.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::orbit::{AlgebraKind, NilpotentOrbit};
use crate::partition::{spaltenstein_fiber, Partition};

/// Component label for maximal-isotropic flags in even orthogonal spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// The flag type of a polarization.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FlagType {
    /// `sl_n`: the full sequence of flag jumps `(p_1, ..., p_s)`.
    Linear { parts: Vec<usize> },
    /// `so_n`/`sp_n`: the first half of the palindrome `(p_1, ..., p_k)`,
    /// the middle jump `q`, and the component sign when the flag contains
    /// a maximal isotropic subspace (`so` even, `q = 0`).
    Isotropic {
        half: Vec<usize>,
        middle: usize,
        sign: Option<Sign>,
    },
}

impl FlagType {
    /// The full jump sequence; for isotropic flags the palindrome
    /// including the middle entry (which may be 0).
    pub fn expanded(&self) -> Vec<usize> {
        match self {
            FlagType::Linear { parts } => parts.clone(),
            FlagType::Isotropic { half, middle, .. } => {
                let mut seq = half.clone();
                seq.push(*middle);
                seq.extend(half.iter().rev());
                seq
            }
        }
    }

    /// Running sums of the expanded jump sequence; the last entry is `n`.
    pub fn cumulative_dims(&self) -> Vec<usize> {
        let mut total = 0;
        self.expanded()
            .iter()
            .map(|&p| {
                total += p;
                total
            })
            .collect()
    }

    pub fn sign(&self) -> Option<Sign> {
        match self {
            FlagType::Linear { .. } => None,
            FlagType::Isotropic { sign, .. } => *sign,
        }
    }

    /// Same flag type with the opposite component sign.
    pub fn with_flipped_sign(&self) -> Option<FlagType> {
        match self {
            FlagType::Isotropic {
                half,
                middle,
                sign: Some(s),
            } => Some(FlagType::Isotropic {
                half: half.clone(),
                middle: *middle,
                sign: Some(s.flipped()),
            }),
            _ => None,
        }
    }

    /// Display label: concatenated digits when every jump is below 10,
    /// comma-separated otherwise, middle omitted when 0, sign appended as
    /// a superscript marker.
    pub fn label(&self) -> String {
        let seq: Vec<usize> = match self {
            FlagType::Linear { parts } => parts.clone(),
            FlagType::Isotropic { half, middle, .. } => {
                let mut seq = half.clone();
                if *middle > 0 {
                    seq.push(*middle);
                }
                seq.extend(half.iter().rev());
                seq
            }
        };
        let body = if seq.iter().all(|&p| p < 10) {
            seq.iter().map(|p| format!("{}", p)).collect::<String>()
        } else {
            let strs: Vec<String> = seq.iter().map(|p| format!("{}", p)).collect();
            strs.join(",")
        };
        let sign = match self.sign() {
            Some(s) => format!("^{}", s),
            None => String::new(),
        };
        format!("Y_{}{}", body, sign)
    }
}

impl fmt::Display for FlagType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// A symplectic resolution `T*(G/P) -> closure(O)`, named by its flag type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Resolution {
    pub orbit: NilpotentOrbit,
    pub flag: FlagType,
    pub label: String,
}

impl Resolution {
    pub fn new(orbit: NilpotentOrbit, flag: FlagType) -> Self {
        let label = flag.label();
        Resolution { orbit, flag, label }
    }
}

/// All distinct orderings of a multiset, ascending lexicographic.
fn multiset_orderings(mut values: Vec<usize>) -> Vec<Vec<usize>> {
    values.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(values.clone());
        // Standard next-permutation step.
        let Some(i) = (0..values.len().saturating_sub(1))
            .rev()
            .find(|&i| values[i] < values[i + 1])
        else {
            break;
        };
        let j = (i + 1..values.len())
            .rev()
            .find(|&j| values[j] > values[i])
            .expect("successor exists");
        values.swap(i, j);
        values[i + 1..].reverse();
    }
    out
}

/// Flag types of the polarizations of a type-A orbit: all orderings of
/// the dual partition.
pub fn polarizations_a(d: &Partition) -> Vec<FlagType> {
    multiset_orderings(d.dual().parts().to_vec())
        .into_iter()
        .map(|parts| FlagType::Linear { parts })
        .collect()
}

/// The dominance-minimal element of the Spaltenstein fiber, the one whose
/// orderings are the flag types of the actual resolutions. `None` when the
/// fiber is empty (no polarization at all).
pub fn minimal_fiber_element(
    d: &Partition,
    eps: crate::partition::Epsilon,
) -> Result<Option<(Partition, usize)>, Error> {
    let fiber = spaltenstein_fiber(d, eps)?;
    if fiber.is_empty() {
        return Ok(None);
    }
    for (e, q) in &fiber {
        if fiber
            .iter()
            .all(|(other, _)| other.dominates(e).unwrap_or(false))
        {
            return Ok(Some((e.clone(), *q)));
        }
    }
    Err(Error::Inconsistency(String::from(
        "Spaltenstein fiber has no dominance-minimal element",
    )))
}

/// Flag types of the symplectic resolutions of a `so`/`sp` orbit closure.
///
/// Empty when the orbit admits no polarization.
pub fn polarizations_bcd(orbit: &NilpotentOrbit) -> Result<Vec<FlagType>, Error> {
    let algebra = orbit.algebra();
    let eps = algebra
        .epsilon()
        .ok_or_else(|| Error::Precondition(String::from("orbit must live in so or sp")))?;
    let Some((e, q)) = minimal_fiber_element(orbit.jordan_type(), eps)? else {
        return Ok(Vec::new());
    };
    // The full palindrome multiset is dual(e); it contains q once (when
    // q > 0) and everything else an even number of times.
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for &v in e.dual().parts() {
        match counts.iter_mut().find(|(value, _)| *value == v) {
            Some((_, c)) => *c += 1,
            None => counts.push((v, 1)),
        }
    }
    if q > 0 {
        let slot = counts
            .iter_mut()
            .find(|(value, count)| *value == q && *count > 0)
            .ok_or_else(|| {
                Error::Inconsistency(String::from("dual of fiber element lacks the middle jump"))
            })?;
        slot.1 -= 1;
    }
    let mut half_multiset = Vec::new();
    for (value, count) in counts {
        if count % 2 != 0 {
            return Err(Error::Inconsistency(String::from(
                "palindromic split failed: odd multiplicity",
            )));
        }
        half_multiset.extend(core::iter::repeat_n(value, count / 2));
    }
    let signed = algebra.kind() == AlgebraKind::So && algebra.n().is_multiple_of(2) && q == 0;
    let mut flags = Vec::new();
    for half in multiset_orderings(half_multiset) {
        if signed {
            for sign in [Sign::Plus, Sign::Minus] {
                flags.push(FlagType::Isotropic {
                    half: half.clone(),
                    middle: q,
                    sign: Some(sign),
                });
            }
        } else {
            flags.push(FlagType::Isotropic {
                half,
                middle: q,
                sign: None,
            });
        }
    }
    Ok(flags)
}

/// Flag types of the symplectic resolutions of any classical orbit closure.
pub fn polarizations(orbit: &NilpotentOrbit) -> Result<Vec<FlagType>, Error> {
    match orbit.algebra().kind() {
        AlgebraKind::Sl => Ok(polarizations_a(orbit.jordan_type())),
        AlgebraKind::So | AlgebraKind::Sp => polarizations_bcd(orbit),
    }
}
