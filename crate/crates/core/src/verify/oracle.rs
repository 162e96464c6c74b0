use crate::gsets::GSet;

/// `sum |X^<g_1, ..., g_m>|` over all `m`-tuples of pairwise commuting group
/// elements. Divided by `|G|` this is `chi^(m-1)(X, G)`.
pub fn commuting_tuple_sum(x: &GSet, m: usize) -> u128 {
    let all: Vec<usize> = (0..x.size()).collect();
    extend(x, m, &mut Vec::new(), &all)
}

fn extend(x: &GSet, m: usize, chosen: &mut Vec<usize>, fixed: &[usize]) -> u128 {
    if chosen.len() == m {
        return fixed.len() as u128;
    }
    let g = x.group();
    let mut total = 0;
    for h in g.elements() {
        if !chosen.iter().all(|&c| g.commute(c, h)) {
            continue;
        }
        let still: Vec<usize> = fixed.iter().copied().filter(|&p| x.act(h, p) == p).collect();
        chosen.push(h);
        total += extend(x, m, chosen, &still);
        chosen.pop();
    }
    total
}
