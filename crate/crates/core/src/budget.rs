use serde::Serialize;

use crate::groebner::GbBudget;

/// Search limits shared by every enumeration in the crate.
///
/// Exceeding any limit is reported as an error; nothing is truncated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    /// Maximum size of a tuple space `|A|^n` that may be enumerated.
    pub max_tuples: u64,
    /// Maximum number of generator assignments tried by a hom search.
    pub max_hom_candidates: u64,
    pub groebner: GbBudget,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_tuples: 20_000_000,
            max_hom_candidates: 10_000_000,
            groebner: GbBudget::default(),
        }
    }
}

impl Budget {
    pub(crate) fn check_tuples(&self, base: u64, exp: usize) -> crate::Result<()> {
        let mut total: u64 = 1;
        for _ in 0..exp {
            total = total.saturating_mul(base.max(1));
            if total > self.max_tuples {
                return Err(crate::Error::Budget(format!(
                    "tuple space {base}^{exp} exceeds max_tuples = {}",
                    self.max_tuples
                )));
            }
        }
        Ok(())
    }
}
