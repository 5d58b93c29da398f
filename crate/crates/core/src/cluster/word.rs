use std::fmt;

use crate::error::{Error, Result};

/// One step of a transformation word (0-based vertex indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Mutate(usize),
    Permute(usize, usize),
    Invert,
}

/// A word written in operator order: the right-most step acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    steps: Vec<Step>,
}

impl Word {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(steps: Vec<Step>) -> Self {
        Self { steps }
    }

    /// Parses whitespace-separated `mK`, `sIJ` (or `sI,J`) and `inv` tokens,
    /// with 1-based vertices.
    pub fn parse(src: &str) -> Result<Self> {
        let mut steps = Vec::new();
        let mut offset = 0;
        for tok in src.split_whitespace() {
            let pos = src[offset..].find(tok).map_or(offset, |p| p + offset);
            offset = pos + tok.len();
            let bad = |msg: &str| Error::Parse {
                pos,
                msg: format!("{msg}: `{tok}`"),
            };
            let step = if tok == "inv" {
                Step::Invert
            } else if let Some(rest) = tok.strip_prefix('m') {
                let k: usize = rest.parse().map_err(|_| bad("bad mutation"))?;
                if k == 0 {
                    return Err(bad("vertices are numbered from 1"));
                }
                Step::Mutate(k - 1)
            } else if let Some(rest) = tok.strip_prefix('s') {
                let (a, b) = match rest.split_once(',') {
                    Some((a, b)) => (a, b),
                    None if rest.len() == 2 => rest.split_at(1),
                    None => return Err(bad("write sIJ with single digits or sI,J")),
                };
                let i: usize = a.parse().map_err(|_| bad("bad permutation"))?;
                let j: usize = b.parse().map_err(|_| bad("bad permutation"))?;
                if i == 0 || j == 0 {
                    return Err(bad("vertices are numbered from 1"));
                }
                Step::Permute(i - 1, j - 1)
            } else {
                return Err(bad("unknown step"));
            };
            steps.push(step);
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Steps in the order they act.
    pub fn application_order(&self) -> impl Iterator<Item = &Step> {
        self.steps.iter().rev()
    }

    /// Every step is an involution, so the inverse is the reversed word.
    pub fn inverse(&self) -> Self {
        Self {
            steps: self.steps.iter().rev().copied().collect(),
        }
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &Self) -> Self {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Self { steps }
    }

    pub fn power(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.steps
            .iter()
            .filter_map(|s| match s {
                Step::Mutate(k) => Some(*k),
                Step::Permute(i, j) => Some(*i.max(j)),
                Step::Invert => None,
            })
            .max()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .steps
            .iter()
            .map(|s| match s {
                Step::Mutate(k) => format!("m{}", k + 1),
                Step::Permute(i, j) if *i < 9 && *j < 9 => format!("s{}{}", i + 1, j + 1),
                Step::Permute(i, j) => format!("s{},{}", i + 1, j + 1),
                Step::Invert => "inv".to_string(),
            })
            .collect();
        write!(f, "{}", toks.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let w = Word::parse("s56 s15 s26 m1 m2").unwrap();
        assert_eq!(w.steps()[0], Step::Permute(4, 5));
        assert_eq!(w.steps()[4], Step::Mutate(1));
        assert_eq!(w.to_string(), "s56 s15 s26 m1 m2");
        assert_eq!(w.application_order().next(), Some(&Step::Mutate(1)));
        assert_eq!(Word::parse("inv s5,6").unwrap().to_string(), "inv s56");
    }

    #[test]
    fn inverse_and_compose() {
        let r = Word::parse("s13 m1").unwrap();
        let l = Word::parse("s23 m2").unwrap();
        assert_eq!(r.inverse().to_string(), "m1 s13");
        assert_eq!(r.compose(&l).to_string(), "s13 m1 s23 m2");
        assert_eq!(r.power(2).steps().len(), 4);
        assert!(Word::parse("").unwrap().is_empty());
    }

    #[test]
    fn parse_errors() {
        assert!(Word::parse("m0").is_err());
        assert!(Word::parse("s123").is_err());
        assert!(matches!(Word::parse("m1 x2"), Err(Error::Parse { pos: 3, .. })));
    }
}
