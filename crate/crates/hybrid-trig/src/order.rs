//! Monomial orders: lex, graded reverse lex, and block elimination orders.

use std::cmp::Ordering;

/// A total order on monomials compatible with multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Lexicographic with an explicit variable priority (highest first).
    /// Must be a permutation of the registry indices.
    Lex(Vec<usize>),
    /// Graded reverse lexicographic over the full registry order.
    Grevlex,
    /// Block elimination order: blocks partition the registry, earlier blocks
    /// dominate, grevlex inside each block. Any monomial containing a
    /// variable of an earlier block exceeds every monomial in later blocks
    /// only, so the basis elements free of the front block generate the
    /// elimination ideal.
    BlockElim { blocks: Vec<Vec<usize>> },
}

impl MonomialOrder {
    /// Plain lex over registry order (variable 0 highest).
    pub fn lex(n: usize) -> MonomialOrder {
        MonomialOrder::Lex((0..n).collect())
    }

    /// Two-block elimination order: `front` above `back`.
    pub fn block_elim(front: Vec<usize>, back: Vec<usize>) -> MonomialOrder {
        MonomialOrder::BlockElim {
            blocks: vec![front, back],
        }
    }

    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex(priority) => {
                for &v in priority {
                    match a[v].cmp(&b[v]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Grevlex => {
                let idx: Vec<usize> = (0..a.len()).collect();
                grevlex_on(a, b, &idx)
            }
            MonomialOrder::BlockElim { blocks } => {
                for block in blocks {
                    match grevlex_on(a, b, block) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Validates against a registry size: lex priorities and block contents
    /// must each be a permutation/partition of `0..n`.
    pub fn is_valid_for(&self, n: usize) -> bool {
        let covers = |idxs: &[usize]| {
            let mut seen = vec![false; n];
            for &i in idxs {
                if i >= n || seen[i] {
                    return None;
                }
                seen[i] = true;
            }
            Some(seen.iter().filter(|&&s| s).count())
        };
        match self {
            MonomialOrder::Lex(p) => covers(p) == Some(n),
            MonomialOrder::Grevlex => true,
            MonomialOrder::BlockElim { blocks } => {
                let flat: Vec<usize> = blocks.iter().flatten().copied().collect();
                covers(&flat) == Some(n)
            }
        }
    }
}

fn grevlex_on(a: &[u32], b: &[u32], vars: &[usize]) -> Ordering {
    let deg_a: u32 = vars.iter().map(|&v| a[v]).sum();
    let deg_b: u32 = vars.iter().map(|&v| b[v]).sum();
    match deg_a.cmp(&deg_b) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // equal degree: smaller exponent on the last differing variable wins
    for &v in vars.iter().rev() {
        match a[v].cmp(&b[v]) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// Componentwise lcm of two exponent vectors.
pub fn exp_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| (*x).max(*y)).collect()
}

/// True when `m` divides `t` componentwise.
pub fn exp_divides(m: &[u32], t: &[u32]) -> bool {
    m.iter().zip(t).all(|(a, b)| a <= b)
}

/// True when the two exponent vectors share no variable.
pub fn exp_coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_classic() {
        // x^2 y z > x y^3 in grlex? degrees 4 vs 4; grevlex compares last var:
        // z-exponent 1 vs 0 => x^2 y z is SMALLER.
        let ord = MonomialOrder::Grevlex;
        assert_eq!(ord.cmp_exps(&[2, 1, 1], &[1, 3, 0]), Ordering::Less);
        assert_eq!(ord.cmp_exps(&[3, 0, 0], &[2, 1, 0]), Ordering::Greater);
        assert_eq!(ord.cmp_exps(&[1, 1, 0], &[1, 0, 0]), Ordering::Greater);
    }

    #[test]
    fn lex_priority() {
        let ord = MonomialOrder::Lex(vec![1, 0]);
        assert_eq!(ord.cmp_exps(&[5, 0], &[0, 1]), Ordering::Less);
    }

    #[test]
    fn block_elimination_property() {
        // front {0}, back {1,2}: any monomial with var0 beats any without
        let ord = MonomialOrder::block_elim(vec![0], vec![1, 2]);
        assert_eq!(ord.cmp_exps(&[1, 0, 0], &[0, 9, 9]), Ordering::Greater);
        assert_eq!(ord.cmp_exps(&[0, 2, 0], &[0, 1, 1]), ord.cmp_exps(&[0, 2, 0], &[0, 1, 1]));
        assert!(ord.is_valid_for(3));
        assert!(!ord.is_valid_for(4));
    }
}
