use std::fmt;

use crate::error::{Error, Result};
use crate::lexer::{tokenize, Cursor, Tok};

/// A bijection on `{0, …, n-1}`.
///
/// Points are 0-based internally; every textual form (cycle notation,
/// JSON) is 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::domain(format!("image {} out of range for degree {n}", x + 1)));
            }
            if seen[x] {
                return Err(Error::domain(format!("image {} repeated", x + 1)));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::domain(format!("point {} exceeds degree {degree}", x + 1)));
                }
                if used[x] {
                    return Err(Error::domain(format!("repeated point {}", x + 1)));
                }
                used[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Order of the permutation as a group element (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| self.images[b] == other.images[a])
    }

    /// Non-trivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// True if the permutation maps the point set onto itself.
    pub fn preserves_set(&self, points: &[usize]) -> bool {
        let mut inside = vec![false; self.degree()];
        for &p in points {
            inside[p] = true;
        }
        points.iter().all(|&p| inside[self.images[p]])
    }

    /// Restriction to an invariant point set, re-indexed to `0..points.len()`
    /// in the order the points are listed.
    pub fn restrict(&self, points: &[usize]) -> Option<Permutation> {
        let mut index = vec![usize::MAX; self.degree()];
        for (i, &p) in points.iter().enumerate() {
            index[p] = i;
        }
        let images: Option<Vec<usize>> = points
            .iter()
            .map(|&p| {
                let q = index[self.images[p]];
                (q != usize::MAX).then_some(q)
            })
            .collect();
        images.map(|images| Permutation { images })
    }

    /// Parses 1-based disjoint cycle notation such as `(1 2 3)(4 5 6)`.
    ///
    /// The empty string, `()` and `id` all denote the identity. Commas are
    /// accepted as separators inside a cycle.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        let toks = tokenize(text)?;
        let mut cur = Cursor::new(&toks, text);
        let p = parse_cycle_word(&mut cur, degree)?;
        if !cur.at_end() {
            return Err(cur.unexpected("'(' or end of input"));
        }
        Ok(p)
    }
}

/// Parses one permutation in cycle notation from the cursor. Stops at the
/// first token that cannot continue a cycle word.
pub(crate) fn parse_cycle_word(cur: &mut Cursor<'_>, degree: usize) -> Result<Permutation> {
    parse_raw_word(cur)?.build(degree)
}

/// A cycle word whose degree is not known yet; points keep their positions
/// for error reporting.
#[derive(Debug, Clone)]
pub(crate) struct RawWord {
    cycles: Vec<Vec<(u64, usize, usize)>>,
}

impl RawWord {
    pub(crate) fn max_point(&self) -> u64 {
        self.cycles.iter().flatten().map(|p| p.0).max().unwrap_or(0)
    }

    pub(crate) fn build(&self, degree: usize) -> Result<Permutation> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in &self.cycles {
            for &(v, line, column) in cycle {
                if v == 0 || v as usize > degree {
                    return Err(Error::parse(line, column, format!("point {v} out of range 1..={degree}")));
                }
                let x = v as usize - 1;
                if used[x] {
                    return Err(Error::parse(line, column, format!("repeated point {v}")));
                }
                used[x] = true;
            }
            for (k, &(v, _, _)) in cycle.iter().enumerate() {
                images[v as usize - 1] = cycle[(k + 1) % cycle.len()].0 as usize - 1;
            }
        }
        Ok(Permutation { images })
    }
}

pub(crate) fn parse_raw_word(cur: &mut Cursor<'_>) -> Result<RawWord> {
    let mut cycles = Vec::new();
    if let Some(Tok::Ident(s)) = cur.peek() {
        if s == "id" {
            cur.next();
            return Ok(RawWord { cycles });
        }
    }
    while cur.peek() == Some(&Tok::LParen) {
        cur.next();
        let mut cycle = Vec::new();
        loop {
            match cur.peek() {
                Some(Tok::RParen) => {
                    cur.next();
                    break;
                }
                Some(Tok::Comma) if !cycle.is_empty() => {
                    cur.next();
                }
                Some(Tok::Int(v)) => {
                    let v = *v;
                    let (line, column) = cur.here();
                    cycle.push((v, line, column));
                    cur.next();
                }
                _ => return Err(cur.unexpected("a point or ')'")),
            }
        }
        cycles.push(cycle);
    }
    if cur.peek() == Some(&Tok::RParen) {
        return Err(cur.error("unmatched ')'"));
    }
    Ok(RawWord { cycles })
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
