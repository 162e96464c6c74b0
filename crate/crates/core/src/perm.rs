//! Plain permutations of `{0, .., n-1}` stored as image vectors.
//!
//! Composition follows the function convention: `compose(a, b)` applies `b`
//! first, so `compose(a, b)[i] == a[b[i]]`.

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Cycles of `p`, each listed from its smallest point as `(i, p(i), p(p(i)), ..)`,
/// ordered by smallest point. Fixed points are 1-cycles.
pub fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = p[x];
        }
        out.push(cycle);
    }
    out
}

/// All permutations of `n` points in lexicographic order; the identity comes first.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current = identity(n);
    let mut out = vec![current.clone()];
    while next_permutation(&mut current) {
        out.push(current.clone());
    }
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The cycle `(0 1 .. n-1)` as an image vector.
pub fn long_cycle(n: usize) -> Vec<usize> {
    (0..n).map(|i| (i + 1) % n).collect()
}

/// The transposition of `a` and `b` on `n` points.
pub fn transposition(n: usize, a: usize, b: usize) -> Vec<usize> {
    let mut p = identity(n);
    p.swap(a, b);
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_enumeration() {
        let all = all_permutations(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1, 2]);
        assert_eq!(all[5], vec![2, 1, 0]);
        assert_eq!(all_permutations(0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn cycles_start_at_minimum() {
        let p = vec![2, 0, 1, 3];
        assert_eq!(cycles(&p), vec![vec![0, 2, 1], vec![3]]);
    }

    #[test]
    fn compose_applies_right_first() {
        let a = transposition(3, 0, 1);
        let b = long_cycle(3);
        // b: 0->1, then a: 1->0
        assert_eq!(compose(&a, &b)[0], 0);
        assert_eq!(compose(&inverse(&b), &b), identity(3));
    }
}
