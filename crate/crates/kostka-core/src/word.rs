//! Words over the alphabet of positive integers and their elementary
//! statistics. Words are plain `Vec<usize>` slices with letters >= 1; the
//! helpers here keep the conventions in one place.

use crate::error::Error;
use crate::Result;

/// Content of a word over the alphabet [1, n]: entry i-1 counts letter i.
pub fn content(w: &[usize], alphabet: usize) -> Vec<usize> {
    let mut c = vec![0usize; alphabet];
    for &x in w {
        if x >= 1 && x <= alphabet {
            c[x - 1] += 1;
        }
    }
    c
}

/// Largest letter appearing in the word (0 for the empty word).
pub fn max_letter(w: &[usize]) -> usize {
    w.iter().copied().max().unwrap_or(0)
}

/// Subword of the letters lying in the interval [lo, hi], position order kept.
pub fn restrict(w: &[usize], lo: usize, hi: usize) -> Vec<usize> {
    w.iter().copied().filter(|&x| lo <= x && x <= hi).collect()
}

/// Check every letter lies in [1, alphabet].
pub fn check_alphabet(w: &[usize], alphabet: usize) -> Result<()> {
    for &x in w {
        if x < 1 || x > alphabet {
            return Err(Error::LetterOutOfRange { letter: x, alphabet });
        }
    }
    Ok(())
}

/// All words of the given length over [1, alphabet], lexicographic order.
pub fn all_words(length: usize, alphabet: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(length);
    fn rec(length: usize, alphabet: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == length {
            out.push(cur.clone());
            return;
        }
        for x in 1..=alphabet {
            cur.push(x);
            rec(length, alphabet, cur, out);
            cur.pop();
        }
    }
    rec(length, alphabet, &mut cur, &mut out);
    out
}

/// Parse a comma-separated word, e.g. `3,1,2`. Empty string = empty word.
pub fn parse(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let x = tok
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))?;
            if x == 0 {
                return Err(Error::Parse("letters start at 1".into()));
            }
            Ok(x)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restrict_examples() {
        assert_eq!(restrict(&[2, 5, 1, 6], 1, 2), vec![2, 1]);
        assert_eq!(restrict(&[2, 5, 1, 6], 1, 6), vec![2, 5, 1, 6]);
        assert_eq!(restrict(&[], 1, 3), Vec::<usize>::new());
    }

    #[test]
    fn content_counts_letters() {
        assert_eq!(content(&[3, 1, 1, 2], 4), vec![2, 1, 1, 0]);
    }

    #[test]
    fn all_words_counts() {
        assert_eq!(all_words(0, 3).len(), 1);
        assert_eq!(all_words(3, 2).len(), 8);
        assert_eq!(all_words(2, 3).len(), 9);
    }

    #[test]
    fn parse_words() {
        assert_eq!(parse("3,1,2").unwrap(), vec![3, 1, 2]);
        assert!(parse("0,1").is_err());
        assert_eq!(parse("").unwrap(), Vec::<usize>::new());
    }
}
