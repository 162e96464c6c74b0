//! Size caps shared by the group and G-set kernels.
//!
//! The group order cap defaults to 5000 and can be overridden with the
//! `KFGR_ORDER_CAP` environment variable. It is always clamped so that a dense
//! multiplication table stays within [`TABLE_CAP`] entries.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_ORDER_CAP: usize = 5000;
/// Maximum number of entries in a dense multiplication table.
pub const TABLE_CAP: usize = 25_000_000;
/// Groups above this order are not decomposed into direct factors.
pub const KRULL_SCHMIDT_CAP: usize = 512;
/// Upper bound on the number of normal subgroups enumerated during decomposition.
pub const NORMAL_SUBGROUP_LIMIT: usize = 20_000;
/// Default node budget of the isomorphism backtracker.
pub const DEFAULT_ISO_BUDGET: u64 = 2_000_000;
/// G-set actions with at most this many (element, point) pairs are stored densely.
pub const DENSE_ACTION_CAP: usize = 1_000_000;
/// Cap on the number of points of a constructed G-set.
pub const POINT_CAP: usize = 2_000_000;

static ORDER_CAP: OnceLock<usize> = OnceLock::new();

pub fn order_cap() -> usize {
    *ORDER_CAP.get_or_init(|| {
        let table_bound = (TABLE_CAP as f64).sqrt() as usize;
        std::env::var("KFGR_ORDER_CAP")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&v| v >= 1)
            .unwrap_or(DEFAULT_ORDER_CAP)
            .min(table_bound)
    })
}

pub(crate) fn check_order(what: &'static str, needed: u128) -> Result<()> {
    let cap = order_cap() as u128;
    if needed > cap {
        return Err(Error::Capacity { what, needed, cap });
    }
    Ok(())
}

pub(crate) fn check_points(what: &'static str, needed: u128) -> Result<()> {
    if needed > POINT_CAP as u128 {
        return Err(Error::Capacity {
            what,
            needed,
            cap: POINT_CAP as u128,
        });
    }
    Ok(())
}

/// `base^exp`, saturating at `u128::MAX`.
pub(crate) fn saturating_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
}
