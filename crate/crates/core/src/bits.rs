//! `u64` vertex-mask helpers shared by the exhaustive algorithms.

#[inline]
pub(crate) fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn iter(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// The component of `alive` containing `start`.
#[inline]
pub(crate) fn reach(rows: &[u64], alive: u64, start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = rows[v] & alive & !seen;
        seen |= new;
        frontier |= new;
    }
    seen
}

/// Number of connected components of the subgraph induced by `alive`.
#[inline]
pub(crate) fn count_components(rows: &[u64], alive: u64) -> usize {
    let mut left = alive;
    let mut count = 0;
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        left &= !reach(rows, left, start);
        count += 1;
    }
    count
}

/// Component masks of the subgraph induced by `alive`, ordered by smallest vertex.
pub(crate) fn component_masks(rows: &[u64], alive: u64) -> Vec<u64> {
    let mut left = alive;
    let mut out = Vec::new();
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let c = reach(rows, left, start);
        out.push(c);
        left &= !c;
    }
    out
}

/// Calls `f` on every `k`-subset of `pool`, in lexicographic order of the
/// sorted vertex lists. Stops early when `f` returns `false`.
pub(crate) fn for_each_subset(pool: u64, k: usize, mut f: impl FnMut(u64) -> bool) {
    let items: Vec<usize> = iter(pool).collect();
    if k > items.len() {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | (1u64 << items[i]));
        if !f(mask) {
            return;
        }
        let mut i = k;
        while i > 0 && idx[i - 1] == items.len() - k + (i - 1) {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        i -= 1;
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_in_lex_order() {
        let mut seen = Vec::new();
        for_each_subset(0b1_1101, 2, |m| {
            seen.push(iter(m).collect::<Vec<_>>());
            true
        });
        assert_eq!(
            seen,
            vec![vec![0, 2], vec![0, 3], vec![0, 4], vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        let mut count = 0;
        for_each_subset(full(6), 3, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 20);
        let mut count = 0;
        for_each_subset(full(3), 0, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn component_counting() {
        // path 0-1-2, isolated 3
        let rows = [0b010, 0b101, 0b010, 0];
        assert_eq!(count_components(&rows, 0b1111), 2);
        assert_eq!(count_components(&rows, 0b1101), 3);
        assert_eq!(component_masks(&rows, 0b1111), vec![0b0111, 0b1000]);
    }
}
