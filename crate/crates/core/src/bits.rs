//! Word-level bit-range primitives used by the set engine.

pub(crate) const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// Reads `n <= 64` bits starting at bit `pos`.
#[inline]
fn read_bits(words: &[u64], pos: usize, n: usize) -> u64 {
    let w = pos / WORD;
    let b = pos % WORD;
    let mut v = words[w] >> b;
    if b != 0 && b + n > WORD {
        v |= words[w + 1] << (WORD - b);
    }
    if n < WORD {
        v & ((1u64 << n) - 1)
    } else {
        v
    }
}

/// ORs the low `n <= 64` bits of `v` into `words` starting at bit `pos`.
/// Bits of `v` above `n` must be clear.
#[inline]
fn or_bits(words: &mut [u64], pos: usize, n: usize, v: u64) {
    let w = pos / WORD;
    let b = pos % WORD;
    words[w] |= v << b;
    if b != 0 && b + n > WORD {
        words[w + 1] |= v >> (WORD - b);
    }
}

/// `dst[dst_pos .. dst_pos+len] |= src[src_pos .. src_pos+len]`.
pub(crate) fn or_range(dst: &mut [u64], dst_pos: usize, src: &[u64], src_pos: usize, len: usize) {
    let mut done = 0;
    while done < len {
        let n = (len - done).min(WORD);
        let v = read_bits(src, src_pos + done, n);
        if v != 0 {
            or_bits(dst, dst_pos + done, n, v);
        }
        done += n;
    }
}

/// Iterator over set bit positions in ascending order.
pub(crate) struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        Ones {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + tz);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}
