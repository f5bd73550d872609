use crate::arith::is_prime;
use crate::elemset::ElemSet;
use crate::skew_brace::SkewBrace;

/// All sets that are Hall π-subgroups of both the additive and the
/// multiplicative group, i.e. all Hall π-sub-skew braces.
pub fn hall_subbraces(b: &SkewBrace, primes: &[usize]) -> Vec<ElemSet> {
    let mul_halls = b.mul_group().hall_subgroups(primes);
    b.add_group()
        .hall_subgroups(primes)
        .into_iter()
        .filter(|h| mul_halls.binary_search(h).is_ok())
        .collect()
}

pub fn sylow_subbraces(b: &SkewBrace, p: usize) -> Vec<ElemSet> {
    debug_assert!(is_prime(p));
    hall_subbraces(b, &[p])
}

/// The lexicographically least Hall π-sub-skew brace, if any.
pub fn hall_subbrace_bruteforce(b: &SkewBrace, primes: &[usize]) -> Option<ElemSet> {
    hall_subbraces(b, primes).into_iter().next()
}
