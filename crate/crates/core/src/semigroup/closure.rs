use std::collections::VecDeque;

use super::FiniteSemigroup;

/// Subsemigroup generated by `gens`: breadth-first closure under right
/// multiplication by generators. Returns sorted element indices.
pub fn closure_under_right_mul<T>(s: &FiniteSemigroup<T>, gens: &[usize]) -> Vec<usize> {
    let mut member = vec![false; s.len()];
    let mut queue = VecDeque::new();
    for &g in gens {
        if !member[g] {
            member[g] = true;
            queue.push_back(g);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = s.mul(x, g);
            if !member[y] {
                member[y] = true;
                queue.push_back(y);
            }
        }
    }
    (0..s.len()).filter(|&x| member[x]).collect()
}

/// The submonoid generated by the idempotents (identity included when the
/// semigroup has one).
pub fn idempotent_closure<T>(s: &FiniteSemigroup<T>) -> Vec<usize> {
    let mut out = closure_under_right_mul(s, &s.idempotents());
    if let Some(one) = s.identity() {
        if let Err(pos) = out.binary_search(&one) {
            out.insert(pos, one);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_closure_is_identity() {
        let s = FiniteSemigroup::build((0..5u8).collect(), |a, b| (a + b) % 5, true).unwrap();
        assert_eq!(idempotent_closure(&s), vec![0]);
    }

    #[test]
    fn semilattice_closure_is_everything() {
        let s = FiniteSemigroup::build(vec![0u8, 1, 2, 3], |a, b| a & b, true).unwrap();
        assert_eq!(idempotent_closure(&s), vec![0, 1, 2, 3]);
    }

    #[test]
    fn cyclic_generation() {
        let s = FiniteSemigroup::build((0..6u8).collect(), |a, b| (a + b) % 6, true).unwrap();
        assert_eq!(closure_under_right_mul(&s, &[2]), vec![0, 2, 4]);
    }
}
