use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::CayleyGroup;
use crate::arith::is_prime;

fn memo() -> &'static Mutex<HashMap<Vec<usize>, bool>> {
    static MEMO: OnceLock<Mutex<HashMap<Vec<usize>, bool>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

impl CayleyGroup {
    pub fn has_prime_order_normal_subgroup(&self) -> bool {
        self.normal_subgroups().iter().any(|s| is_prime(s.len()))
    }

    /// Every nontrivial image has a normal subgroup of prime order.
    ///
    /// Each proper image `G/K` with `K ≠ 1` is an image of `G/N` for a minimal
    /// normal `N ≤ K`, so the check recurses through those quotients, memoized
    /// on their exact tables.
    pub fn is_supersoluble(&self) -> bool {
        if self.order == 1 {
            return true;
        }
        if let Some(&known) = memo().lock().unwrap().get(&self.table) {
            return known;
        }
        let result = self.has_prime_order_normal_subgroup()
            && self.minimal_normal_subgroups().iter().all(|n| {
                self.quotient(n)
                    .expect("normal subgroup")
                    .group
                    .is_supersoluble()
            });
        memo().lock().unwrap().insert(self.table.clone(), result);
        result
    }
}
