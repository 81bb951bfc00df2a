use crate::error::{Error, Result};

/// Default cap on the number of elements of any constructed ring.
pub const DEFAULT_MAX_ORDER: usize = 10_000;
/// Rings up to this order get full addition and multiplication tables.
pub const DEFAULT_MATERIALIZE_THRESHOLD: usize = 1024;
pub const DEFAULT_MAX_GROUP_ORDER: usize = 64;

/// Size policy shared by every construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub materialize_threshold: usize,
    pub max_group_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            materialize_threshold: DEFAULT_MATERIALIZE_THRESHOLD,
            max_group_order: DEFAULT_MAX_GROUP_ORDER,
        }
    }
}

impl Limits {
    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }

    pub fn with_materialize_threshold(mut self, threshold: usize) -> Self {
        self.materialize_threshold = threshold;
        self
    }

    /// Limits under which every ring is computed on demand.
    pub fn lazy() -> Self {
        Limits::default().with_materialize_threshold(0)
    }

    /// Limits under which every admissible ring is fully tabulated.
    pub fn eager() -> Self {
        Limits::default().with_materialize_threshold(usize::MAX)
    }

    /// `order` is `None` when the true order overflowed `usize`.
    pub(crate) fn check_ring(&self, what: &str, order: Option<usize>) -> Result<usize> {
        match order {
            Some(n) if n <= self.max_order => Ok(n),
            Some(n) => Err(Error::Limit {
                what: what.to_string(),
                order: n.to_string(),
                limit: self.max_order,
            }),
            None => Err(Error::Limit {
                what: what.to_string(),
                order: "overflow".to_string(),
                limit: self.max_order,
            }),
        }
    }

    pub(crate) fn check_group(&self, what: &str, order: Option<usize>) -> Result<usize> {
        match order {
            Some(n) if n <= self.max_group_order => Ok(n),
            other => Err(Error::Limit {
                what: what.to_string(),
                order: other.map_or("overflow".to_string(), |n| n.to_string()),
                limit: self.max_group_order,
            }),
        }
    }
}

pub(crate) fn checked_order_pow(base: usize, exp: usize) -> Option<usize> {
    u32::try_from(exp).ok().and_then(|e| base.checked_pow(e))
}
