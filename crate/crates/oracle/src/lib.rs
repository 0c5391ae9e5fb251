//! Independent oracles for braid-word equality.
//!
//! Nothing here depends on the Garside machinery in `sigmab-core`: words are
//! plain `&[i32]` slices where `+i` is the Artin generator `s_i` and `-i` its
//! inverse (1-based). Two deciders are provided:
//!
//! * [`artin_bfs_equal`] searches the graph of words connected by single Artin
//!   rewrites (commutation, braid relation, free cancellation and insertion),
//!   bounded by a maximum word length. A hit is a certificate of equality.
//! * [`free_group_action`] computes Artin's action of a braid on the free group
//!   `F_n`. The action is faithful, so differing images certify inequality.
//!
//! [`decide`] combines both and reports when neither side is conclusive.

use std::collections::{HashSet, VecDeque};

pub type RawWord = Vec<i32>;

/// Removes adjacent inverse pairs until none remain.
pub fn free_reduce(word: &[i32]) -> RawWord {
    let mut out: RawWord = Vec::with_capacity(word.len());
    for &g in word {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

pub fn invert(word: &[i32]) -> RawWord {
    word.iter().rev().map(|g| -g).collect()
}

/// All single-rewrite neighbours of `word` whose length stays within `bound`.
fn neighbours(strands: usize, word: &[i32], bound: usize, out: &mut Vec<RawWord>) {
    let len = word.len();
    // free cancellation
    for k in 0..len.saturating_sub(1) {
        if word[k] == -word[k + 1] {
            let mut w = word[..k].to_vec();
            w.extend_from_slice(&word[k + 2..]);
            out.push(w);
        }
    }
    // free insertion
    if len + 2 <= bound {
        for k in 0..=len {
            for i in 1..strands as i32 {
                for g in [i, -i] {
                    let mut w = Vec::with_capacity(len + 2);
                    w.extend_from_slice(&word[..k]);
                    w.push(g);
                    w.push(-g);
                    w.extend_from_slice(&word[k..]);
                    out.push(w);
                }
            }
        }
    }
    // far commutation
    for k in 0..len.saturating_sub(1) {
        let (a, b) = (word[k], word[k + 1]);
        if (a.abs() - b.abs()).abs() >= 2 {
            let mut w = word.to_vec();
            w.swap(k, k + 1);
            out.push(w);
        }
    }
    // braid relation, in both the positive and the inverted form
    for k in 0..len.saturating_sub(2) {
        let (a, b, c) = (word[k], word[k + 1], word[k + 2]);
        if a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1 {
            let mut w = word.to_vec();
            w[k] = b;
            w[k + 1] = a;
            w[k + 2] = b;
            out.push(w);
        }
    }
}

/// Breadth-first search for a chain of Artin rewrites from `u` to `v` through
/// words of length at most `bound`.
pub fn artin_bfs_within(strands: usize, u: &[i32], v: &[i32], bound: usize) -> bool {
    let start = free_reduce(u);
    let goal = free_reduce(v);
    if start == goal {
        return true;
    }
    if start.len() > bound || goal.len() > bound {
        return false;
    }
    let mut seen: HashSet<RawWord> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    let mut scratch = Vec::new();
    while let Some(w) = queue.pop_front() {
        scratch.clear();
        neighbours(strands, &w, bound, &mut scratch);
        for next in scratch.drain(..) {
            if next == goal {
                return true;
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

/// Iterative deepening over [`artin_bfs_within`], from the longer input length
/// up to `max_len`.
pub fn artin_bfs_equal(strands: usize, u: &[i32], v: &[i32], max_len: usize) -> bool {
    let u = free_reduce(u);
    let v = free_reduce(v);
    let lo = u.len().max(v.len());
    (lo..=max_len.max(lo)).any(|bound| artin_bfs_within(strands, &u, &v, bound))
}

/// Images of the free generators `x_1..x_n` under Artin's action of `word`,
/// as freely reduced words (`+j` is `x_j`, `-j` its inverse).
pub fn free_group_action(strands: usize, word: &[i32]) -> Vec<RawWord> {
    let mut images: Vec<RawWord> = (1..=strands as i32).map(|j| vec![j]).collect();
    for &g in word.iter().rev() {
        for img in images.iter_mut() {
            let mut next = Vec::with_capacity(img.len() * 3);
            for &x in img.iter() {
                next.extend(substitute(g, x));
            }
            *img = free_reduce(&next);
        }
    }
    images
}

/// Image of the single letter `x` under the automorphism of generator `g`.
fn substitute(g: i32, x: i32) -> RawWord {
    let i = g.abs();
    let (letter, inverted) = (x.abs(), x < 0);
    let image: RawWord = if g > 0 {
        if letter == i {
            vec![i, i + 1, -i]
        } else if letter == i + 1 {
            vec![i]
        } else {
            vec![letter]
        }
    } else if letter == i {
        vec![i + 1]
    } else if letter == i + 1 {
        vec![-(i + 1), i, i + 1]
    } else {
        vec![letter]
    };
    if inverted {
        invert(&image)
    } else {
        image
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    NotEqual,
    /// Same free-group action but no rewrite chain found within the bound.
    Inconclusive,
}

/// Equality verdict from the two independent deciders.
pub fn decide(strands: usize, u: &[i32], v: &[i32], max_len: usize) -> Verdict {
    if free_group_action(strands, u) != free_group_action(strands, v) {
        return Verdict::NotEqual;
    }
    if artin_bfs_equal(strands, u, v, max_len) {
        Verdict::Equal
    } else {
        Verdict::Inconclusive
    }
}

/// Every word of length at most `max_len` on `strands` strands, shortest first.
pub fn enumerate_words(strands: usize, max_len: usize) -> Vec<RawWord> {
    let letters: Vec<i32> = (1..strands as i32).flat_map(|i| [i, -i]).collect();
    let mut all = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &g in &letters {
                let mut w2 = w.clone();
                w2.push(g);
                next.push(w2);
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// Applies `steps` random single rewrites that keep the word length at most
/// `bound`. `next_u64` is any uniform source.
pub fn random_rewrite(
    strands: usize,
    word: &[i32],
    bound: usize,
    steps: usize,
    mut next_u64: impl FnMut() -> u64,
) -> RawWord {
    let mut w = word.to_vec();
    let mut scratch = Vec::new();
    for _ in 0..steps {
        scratch.clear();
        neighbours(strands, &w, bound, &mut scratch);
        if scratch.is_empty() {
            break;
        }
        let pick = (next_u64() % scratch.len() as u64) as usize;
        w = scratch.swap_remove(pick);
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_relation_found() {
        assert!(artin_bfs_equal(3, &[1, 2, 1], &[2, 1, 2], 10));
        assert_eq!(decide(3, &[1, 2, 1], &[2, 1, 2], 10), Verdict::Equal);
    }

    #[test]
    fn conjugation_needs_insertions() {
        // s1 s2 s1^-1 = s2^-1 s1 s2
        assert_eq!(decide(3, &[1, 2, -1], &[-2, 1, 2], 10), Verdict::Equal);
    }

    #[test]
    fn inverse_generators_differ() {
        assert_eq!(decide(2, &[1], &[-1], 10), Verdict::NotEqual);
        assert_eq!(decide(3, &[1, 1], &[], 10), Verdict::NotEqual);
    }

    #[test]
    fn action_is_a_representation() {
        // relation holds in the action
        assert_eq!(free_group_action(4, &[1, 3]), free_group_action(4, &[3, 1]));
        assert_eq!(free_group_action(4, &[2, -2]), free_group_action(4, &[]));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_words(3, 2).len(), 1 + 4 + 16);
    }
}
