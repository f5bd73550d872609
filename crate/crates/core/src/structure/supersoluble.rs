use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::arith::is_prime;
use crate::elemset::ElemSet;
use crate::skew_brace::SkewBrace;

type Key = (Vec<usize>, Vec<usize>);

fn memo() -> &'static Mutex<HashMap<Key, bool>> {
    static MEMO: OnceLock<Mutex<HashMap<Key, bool>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Ideals of prime order, sorted by prime and then lexicographically.
pub fn prime_order_ideals(b: &SkewBrace) -> Vec<ElemSet> {
    let add = b.add_group();
    let mut found: Vec<ElemSet> = add
        .elements()
        .filter(|&x| x != 0 && is_prime(add.element_order(x)))
        .map(|x| add.generated(&[x]))
        .collect();
    found.sort_by(|s, t| (s.len(), s).cmp(&(t.len(), t)));
    found.dedup();
    found.retain(|s| b.is_ideal(s));
    found
}

/// An ideal of prime order, preferring the smallest prime and then the
/// lexicographically least set.
pub fn minimal_prime_ideal(b: &SkewBrace) -> Option<ElemSet> {
    prime_order_ideals(b).into_iter().next()
}

/// Minimal nontrivial ideals.
pub fn minimal_ideals(b: &SkewBrace) -> Vec<ElemSet> {
    let ideals: Vec<ElemSet> = b.ideals().into_iter().filter(|i| i.len() > 1).collect();
    ideals
        .iter()
        .filter(|i| !ideals.iter().any(|j| j.len() < i.len() && j.is_subset(i)))
        .cloned()
        .collect()
}

/// Every nontrivial image has an ideal of prime order.
///
/// Images by a nonzero ideal factor through `B/I` for a minimal ideal `I`, so
/// the check is: `B` has a prime-order ideal and each `B/I` is supersoluble.
/// Results are memoized on the exact pair of tables.
pub fn brace_is_supersoluble(b: &SkewBrace) -> bool {
    if b.order() == 1 {
        return true;
    }
    let key = (
        b.add_group().table().to_vec(),
        b.mul_group().table().to_vec(),
    );
    if let Some(&known) = memo().lock().unwrap().get(&key) {
        return known;
    }
    let result = !prime_order_ideals(b).is_empty()
        && minimal_ideals(b)
            .iter()
            .all(|i| brace_is_supersoluble(&b.quotient(i).expect("minimal ideal").brace));
    memo().lock().unwrap().insert(key, result);
    result
}
