use super::GrowthError;

const NONE: u32 = u32::MAX;

/// Suffix automaton of a single word.
///
/// Every state other than the root stands for the factors of lengths
/// `len(link) + 1 ..= len` sharing one set of end positions; `first_end` is
/// the end index of their first occurrence.
#[derive(Clone, Debug)]
pub struct SuffixAutomaton {
    sigma: usize,
    alphabet: [u16; 256],
    next: Vec<u32>,
    link: Vec<u32>,
    len: Vec<u32>,
    first_end: Vec<u32>,
}

impl SuffixAutomaton {
    pub fn new(word: &[u8]) -> Self {
        let mut alphabet = [u16::MAX; 256];
        let mut sigma = 0usize;
        for &c in word {
            if alphabet[c as usize] == u16::MAX {
                alphabet[c as usize] = sigma as u16;
                sigma += 1;
            }
        }
        let sigma = sigma.max(1);
        let cap = 2 * word.len() + 1;
        let mut sa = SuffixAutomaton {
            sigma,
            alphabet,
            next: Vec::with_capacity(cap * sigma),
            link: Vec::with_capacity(cap),
            len: Vec::with_capacity(cap),
            first_end: Vec::with_capacity(cap),
        };
        sa.push_state(0, NONE, 0);
        let mut last = 0u32;
        for (pos, &ch) in word.iter().enumerate() {
            let c = sa.alphabet[ch as usize] as usize;
            let cur = sa.push_state(sa.len[last as usize] + 1, NONE, pos as u32);
            let mut p = last;
            while p != NONE && sa.edge(p, c) == NONE {
                sa.set_edge(p, c, cur);
                p = sa.link[p as usize];
            }
            if p == NONE {
                sa.link[cur as usize] = 0;
            } else {
                let q = sa.edge(p, c);
                if sa.len[p as usize] + 1 == sa.len[q as usize] {
                    sa.link[cur as usize] = q;
                } else {
                    let clone = sa.push_state(sa.len[p as usize] + 1, sa.link[q as usize], sa.first_end[q as usize]);
                    let (from, to) = (q as usize * sigma, clone as usize * sigma);
                    sa.next.copy_within(from..from + sigma, to);
                    while p != NONE && sa.edge(p, c) == q {
                        sa.set_edge(p, c, clone);
                        p = sa.link[p as usize];
                    }
                    sa.link[q as usize] = clone;
                    sa.link[cur as usize] = clone;
                }
            }
            last = cur;
        }
        sa
    }

    fn push_state(&mut self, len: u32, link: u32, first_end: u32) -> u32 {
        let id = self.len.len() as u32;
        self.len.push(len);
        self.link.push(link);
        self.first_end.push(first_end);
        self.next.extend(std::iter::repeat_n(NONE, self.sigma));
        id
    }

    fn edge(&self, state: u32, c: usize) -> u32 {
        self.next[state as usize * self.sigma + c]
    }

    fn set_edge(&mut self, state: u32, c: usize, to: u32) {
        self.next[state as usize * self.sigma + c] = to;
    }

    pub fn num_states(&self) -> usize {
        self.len.len()
    }

    /// Whether `factor` occurs in the word.
    pub fn contains(&self, factor: &[u8]) -> bool {
        let mut s = 0u32;
        for &ch in factor {
            let c = self.alphabet[ch as usize];
            if c == u16::MAX {
                return false;
            }
            s = self.edge(s, c as usize);
            if s == NONE {
                return false;
            }
        }
        true
    }

    /// Calls `visit(lo, hi, first_end)` for every non-root state, where the
    /// state's factors have lengths `lo + 1 ..= hi`.
    fn for_each_class(&self, mut visit: impl FnMut(usize, usize, usize)) {
        for v in 1..self.len.len() {
            visit(self.len[self.link[v] as usize] as usize, self.len[v] as usize, self.first_end[v] as usize);
        }
    }
}

fn check_range(word: &[u8], max_len: usize) -> Result<(), GrowthError> {
    if max_len > word.len() {
        return Err(GrowthError::MaxLenOutOfRange { max_len, word_len: word.len() });
    }
    Ok(())
}

fn accumulate(diff: &[i64]) -> Vec<u64> {
    let mut run = 0i64;
    diff[1..]
        .iter()
        .map(|d| {
            run += d;
            run as u64
        })
        .collect()
}

/// `c_1, …, c_maxLen`: numbers of distinct factors of each length.
pub fn factor_complexity(word: &[u8], max_len: usize) -> Result<Vec<u64>, GrowthError> {
    check_range(word, max_len)?;
    let sa = SuffixAutomaton::new(word);
    let mut diff = vec![0i64; max_len + 2];
    sa.for_each_class(|lo, hi, _| {
        if lo < max_len {
            diff[lo + 1] += 1;
            diff[hi.min(max_len) + 1] -= 1;
        }
    });
    diff.truncate(max_len + 1);
    Ok(accumulate(&diff))
}

/// Like [`factor_complexity`], counting only factors with at most `bound`
/// occurrences of `letter`.
pub fn bounded_factor_complexity(
    word: &[u8],
    max_len: usize,
    letter: u8,
    bound: usize,
) -> Result<Vec<u64>, GrowthError> {
    check_range(word, max_len)?;
    let sa = SuffixAutomaton::new(word);
    let mut prefix = Vec::with_capacity(word.len() + 1);
    prefix.push(0usize);
    for &c in word {
        prefix.push(prefix[prefix.len() - 1] + usize::from(c == letter));
    }
    let mut diff = vec![0i64; max_len + 2];
    sa.for_each_class(|lo, hi, end| {
        // The factor of length k is word[end+1-k ..= end]; it qualifies iff its
        // start s satisfies prefix[s] >= prefix[end+1] - bound.
        let need = prefix[end + 1].saturating_sub(bound);
        let s0 = prefix.partition_point(|&p| p < need);
        let longest = end + 1 - s0;
        let top = hi.min(max_len).min(longest);
        if lo < top {
            diff[lo + 1] += 1;
            diff[top + 1] -= 1;
        }
    });
    diff.truncate(max_len + 1);
    Ok(accumulate(&diff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn brute(word: &[u8], max_len: usize, keep: impl Fn(&[u8]) -> bool) -> Vec<u64> {
        (1..=max_len).map(|k| word.windows(k).filter(|f| keep(f)).collect::<HashSet<_>>().len() as u64).collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(factor_complexity(&[0, 1, 0], 3).unwrap(), vec![2, 2, 1]);
        assert_eq!(factor_complexity(&[0, 0, 0, 0], 4).unwrap(), vec![1, 1, 1, 1]);
        let periodic: Vec<u8> = (0..40).map(|i| (i % 2) as u8).collect();
        assert!(factor_complexity(&periodic, 30).unwrap().iter().all(|&c| c == 2));
        assert_eq!(factor_complexity(&[], 0).unwrap(), Vec::<u64>::new());
        assert!(factor_complexity(&[0, 1], 3).is_err());
    }

    #[test]
    fn matches_brute_force() {
        let words: [&[u8]; 4] =
            [b"abracadabra", b"mississippi", &[0, 1, 1, 0, 1, 0, 0, 1, 1, 0], &[2, 2, 1, 2, 0, 2, 2, 1]];
        for w in words {
            assert_eq!(factor_complexity(w, w.len()).unwrap(), brute(w, w.len(), |_| true));
            for bound in 0..3 {
                let got = bounded_factor_complexity(w, w.len(), w[1], bound).unwrap();
                let want = brute(w, w.len(), |f| f.iter().filter(|&&c| c == w[1]).count() <= bound);
                assert_eq!(got, want, "word {w:?} bound {bound}");
            }
        }
    }

    #[test]
    fn containment() {
        let sa = SuffixAutomaton::new(b"banana");
        assert!(sa.contains(b"nan") && sa.contains(b"") && !sa.contains(b"nab") && !sa.contains(b"z"));
        assert!(sa.num_states() <= 2 * 6);
    }
}
