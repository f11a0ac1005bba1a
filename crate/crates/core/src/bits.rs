//! Subsets of a small ground set as `u64` bitmasks.

/// All `k`-subsets of `{0..n}` in increasing numeric order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    assert!(n <= 63, "ground set too large for u64 masks");
    let limit = 1u64 << n;
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nx = (((r ^ cur) >> 2) / c) | r;
            (nx < limit).then_some(nx)
        };
        Some(cur)
    })
}

/// Every subset of `{0..n}`.
pub fn all_subsets(n: usize) -> std::ops::Range<u64> {
    assert!(n <= 63, "ground set too large for u64 masks");
    0..(1u64 << n)
}

/// Element indices of `mask`, ascending.
pub fn elements(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(i)
    })
}

pub fn size(mask: u64) -> usize {
    mask.count_ones() as usize
}

/// Mask from 0-based indices.
pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> u64 {
    it.into_iter().fold(0, |m, i| m | (1u64 << i))
}

/// Sorted 1-based element list, the external form of a subset.
pub fn to_one_based(mask: u64) -> Vec<usize> {
    elements(mask).map(|i| i + 1).collect()
}

/// Subsets of `mask`, including the empty set and `mask` itself.
pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut cur = Some(mask);
    std::iter::from_fn(move || {
        let s = cur?;
        cur = if s == 0 { None } else { Some((s - 1) & mask) };
        Some(s)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn subset_counts() {
        for n in 0..10 {
            for k in 0..=n + 1 {
                let v: Vec<u64> = k_subsets(n, k).collect();
                let want = if k > n { 0 } else { binom(n as u64, k as u64) };
                assert_eq!(v.len() as u64, want, "n={n} k={k}");
                assert!(v.windows(2).all(|w| w[0] < w[1]));
                assert!(v.iter().all(|&m| size(m) == k && m < 1 << n));
            }
        }
    }

    #[test]
    fn element_round_trip() {
        let m = from_indices([0, 3, 5]);
        assert_eq!(elements(m).collect::<Vec<_>>(), vec![0, 3, 5]);
        assert_eq!(to_one_based(m), vec![1, 4, 6]);
        assert_eq!(submasks(m).count(), 8);
    }
}
