//! The polynomial families `T_n`, `S_n`, `T̄_n`, `U_n`, `x^n` and the
//! normalized-sequence wrapper used by the dominance order.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use super::poly::PolyX;
use crate::error::{Result, SkeinError};

/// Lazily extended table of a sequence satisfying `f_{n+1} = x f_n - f_{n-1}`.
struct RecurrenceTable {
    values: RwLock<Vec<Arc<PolyX>>>,
}

impl RecurrenceTable {
    fn new(first: PolyX, second: PolyX) -> Self {
        Self {
            values: RwLock::new(vec![Arc::new(first), Arc::new(second)]),
        }
    }

    fn get(&self, idx: usize) -> Arc<PolyX> {
        if let Some(v) = self.values.read().expect("sequence cache poisoned").get(idx) {
            return Arc::clone(v);
        }
        let mut values = self.values.write().expect("sequence cache poisoned");
        while values.len() <= idx {
            let n = values.len();
            let next = &values[n - 1].mul_x() - &*values[n - 2];
            values.push(Arc::new(next));
        }
        Arc::clone(&values[idx])
    }
}

fn t_table() -> &'static RecurrenceTable {
    static TABLE: OnceLock<RecurrenceTable> = OnceLock::new();
    TABLE.get_or_init(|| RecurrenceTable::new(PolyX::constant(2), PolyX::x()))
}

/// Slot `i` holds `S_{i-1}`.
fn s_table() -> &'static RecurrenceTable {
    static TABLE: OnceLock<RecurrenceTable> = OnceLock::new();
    TABLE.get_or_init(|| RecurrenceTable::new(PolyX::zero(), PolyX::one()))
}

/// Chebyshev polynomial of the first kind, `T_0 = 2`, `T_1 = x`.
pub fn cheb_t(n: usize) -> PolyX {
    (*t_table().get(n)).clone()
}

pub(crate) fn cheb_t_ref(n: usize) -> Arc<PolyX> {
    t_table().get(n)
}

/// Chebyshev polynomial of the second kind, `S_{-1} = 0`, `S_0 = 1`, `S_1 = x`.
pub fn cheb_s(n: i64) -> Result<PolyX> {
    Ok((*cheb_s_ref(n)?).clone())
}

pub(crate) fn cheb_s_ref(n: i64) -> Result<Arc<PolyX>> {
    if n < -1 {
        return Err(SkeinError::IndexOutOfRange {
            what: "S_n",
            value: n,
            min: -1,
        });
    }
    Ok(s_table().get((n + 1) as usize))
}

/// `S_n - S_{n-1}` for `n ≥ 0` (equal to `1` at `n = 0`).
pub fn s_diff(n: usize) -> PolyX {
    let n = n as i64;
    let hi = s_table().get((n + 1) as usize);
    let lo = s_table().get(n as usize);
    &*hi - &*lo
}

/// `T̄_0 = 1`, `T̄_n = T_n` for `n ≥ 1`.
pub fn cheb_tbar(n: usize) -> PolyX {
    if n == 0 {
        PolyX::one()
    } else {
        cheb_t(n)
    }
}

/// `(x^2 - 2)^{n/2}` for even `n`, `(x^2 - 2)^{(n-1)/2} · x` for odd `n`.
pub fn seq_u(n: usize) -> PolyX {
    let p = PolyX::from_ints(&[-2, 0, 1]);
    let mut acc = if n % 2 == 1 { PolyX::x() } else { PolyX::one() };
    for _ in 0..n / 2 {
        acc = &acc * &p;
    }
    acc
}

/// Index appearing in the `T_n · (S_m - S_{m-1})` product rule.
pub fn eps(n: usize, m: usize) -> usize {
    if n > m {
        n - m - 1
    } else {
        m - n
    }
}

/// The named normalized families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `T̄_n`.
    Tbar,
    /// `S_n`.
    S,
    /// `S_n - S_{n-1}`, with `1` at `n = 0`.
    SDiff,
    /// `U_n`.
    U,
    /// `x^n`.
    Monomial,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Tbar,
        Family::S,
        Family::SDiff,
        Family::U,
        Family::Monomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Tbar => "Tbar",
            Family::S => "S",
            Family::SDiff => "Sdiff",
            Family::U => "U",
            Family::Monomial => "X",
        }
    }

    pub fn term(self, n: usize) -> PolyX {
        match self {
            Family::Tbar => cheb_tbar(n),
            Family::S => (*s_table().get(n + 1)).clone(),
            Family::SDiff => s_diff(n),
            Family::U => seq_u(n),
            Family::Monomial => PolyX::x_pow(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = SkeinError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Tbar" | "tbar" => Ok(Family::Tbar),
            "S" | "s" => Ok(Family::S),
            "Sdiff" | "sdiff" | "SDiff" => Ok(Family::SDiff),
            "U" | "u" => Ok(Family::U),
            "X" | "x" | "x^n" | "mono" => Ok(Family::Monomial),
            _ => Err(SkeinError::UnknownName {
                kind: "sequence family",
                value: s.to_string(),
            }),
        }
    }
}

type Generator = dyn Fn(usize) -> PolyX + Send + Sync;

/// A sequence of polynomials meant to hold one monic polynomial of each
/// degree. The generator is not trusted: consumers call [`check_upto`]
/// before relying on monicity.
///
/// [`check_upto`]: NormalizedSequence::check_upto
#[derive(Clone)]
pub struct NormalizedSequence {
    name: String,
    generator: Arc<Generator>,
}

impl NormalizedSequence {
    pub fn new(name: impl Into<String>, generator: impl Fn(usize) -> PolyX + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            generator: Arc::new(generator),
        }
    }

    pub fn family(family: Family) -> Self {
        Self::new(family.name(), move |n| family.term(n))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn term(&self, n: usize) -> PolyX {
        (self.generator)(n)
    }

    /// Checks monicity and exact degree for every `n ≤ max`.
    pub fn check_upto(&self, max: usize) -> Result<()> {
        for n in 0..=max {
            if !self.term(n).is_monic_of_degree(n) {
                return Err(SkeinError::NotNormalized {
                    name: self.name.clone(),
                    n,
                });
            }
        }
        Ok(())
    }
}

impl From<Family> for NormalizedSequence {
    fn from(family: Family) -> Self {
        Self::family(family)
    }
}

impl fmt::Debug for NormalizedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NormalizedSequence").field("name", &self.name).finish()
    }
}
