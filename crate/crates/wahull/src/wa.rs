//! Weighted automata over the rationals: evaluation, reachability spans,
//! minimization, equivalence and the syntactic sequentiality test.
//!
//! A weighted automaton of dimension `d` is a triple `(u, mu, v)` of an
//! initial row vector, one `d x d` transition matrix per letter, and a
//! final column vector. It realizes the series `w -> u mu(w) v`.

use crate::error::{Error, Result};
use crate::linalg::{matrix_times_col, row_times_matrix, vec_ops, Matrix, Scalar, Subspace};

/// A word as a sequence of letter indices into an automaton's alphabet.
pub type Word = Vec<usize>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedAutomaton {
    alphabet: Vec<String>,
    dim: usize,
    initial: Vec<Scalar>,
    transitions: Vec<Matrix>,
    final_weights: Vec<Scalar>,
}

impl WeightedAutomaton {
    /// `transitions` must be aligned with `alphabet`; all matrices are
    /// `dim x dim`, `initial` is a row and `final_weights` a column of
    /// length `dim`.
    pub fn new(
        alphabet: Vec<String>,
        initial: Vec<Scalar>,
        transitions: Vec<Matrix>,
        final_weights: Vec<Scalar>,
    ) -> Result<Self> {
        validate_alphabet(&alphabet)?;
        let dim = initial.len();
        if transitions.len() != alphabet.len() {
            return Err(Error::DimensionMismatch {
                expected: alphabet.len(),
                found: transitions.len(),
            });
        }
        for m in &transitions {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: if m.rows() != dim { m.rows() } else { m.cols() },
                });
            }
        }
        if final_weights.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: final_weights.len(),
            });
        }
        Ok(WeightedAutomaton {
            alphabet,
            dim,
            initial,
            transitions,
            final_weights,
        })
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn initial(&self) -> &[Scalar] {
        &self.initial
    }

    pub fn final_weights(&self) -> &[Scalar] {
        &self.final_weights
    }

    pub fn transition(&self, letter: usize) -> &Matrix {
        &self.transitions[letter]
    }

    pub fn transitions(&self) -> &[Matrix] {
        &self.transitions
    }

    pub fn letter_index(&self, letter: &str) -> Result<usize> {
        self.alphabet
            .iter()
            .position(|l| l == letter)
            .ok_or_else(|| Error::UnknownLetter(letter.to_string()))
    }

    /// Parses a word over this alphabet. A plain string is split into
    /// single-character letters; a bracketed comma-separated list
    /// (`[ab,ba]`) names multi-character letters explicitly.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::InvalidInput(format!("unterminated word list {s:?}")))?;
            if inner.is_empty() {
                return Ok(Vec::new());
            }
            return inner.split(',').map(|l| self.letter_index(l.trim())).collect();
        }
        s.chars()
            .map(|c| self.letter_index(&c.to_string()))
            .collect()
    }

    pub fn format_word(&self, word: &[usize]) -> String {
        if self.alphabet.iter().all(|l| l.chars().count() == 1) {
            word.iter().map(|&i| self.alphabet[i].clone()).collect()
        } else {
            let letters: Vec<&str> = word.iter().map(|&i| self.alphabet[i].as_str()).collect();
            format!("[{}]", letters.join(","))
        }
    }

    /// `u mu(w) v`, computed exactly.
    pub fn eval(&self, word: &[usize]) -> Scalar {
        let mut x = self.initial.clone();
        for &a in word {
            x = row_times_matrix(&x, &self.transitions[a]);
        }
        vec_ops::dot(&x, &self.final_weights)
    }

    /// Evaluates a word given as letter names.
    pub fn eval_letters(&self, letters: &[&str]) -> Result<Scalar> {
        let word: Word = letters
            .iter()
            .map(|l| self.letter_index(l))
            .collect::<Result<_>>()?;
        Ok(self.eval(&word))
    }

    /// Span of the forward reachability set `{ u mu(w) | w }`, computed by
    /// worklist closure: start from `u`, apply each transition matrix, and
    /// keep vectors that enlarge the span until a fixpoint is reached.
    pub fn left_reach_basis(&self) -> Subspace {
        let mut span = Subspace::zero(self.dim);
        let mut queue = Vec::new();
        if span.insert(&self.initial) {
            queue.push(self.initial.clone());
        }
        while let Some(x) = queue.pop() {
            for m in &self.transitions {
                let y = row_times_matrix(&x, m);
                if span.insert(&y) {
                    queue.push(y);
                }
            }
        }
        span
    }

    /// Span of the backward reachability set `{ mu(w) v | w }`, returned as
    /// a subspace of row vectors (the transposes of the reached columns).
    pub fn right_reach_basis(&self) -> Subspace {
        self.reversed().left_reach_basis()
    }

    /// Transposed automaton: swaps initial and final vectors and transposes
    /// every transition matrix, reversing the series word-wise.
    pub fn reversed(&self) -> WeightedAutomaton {
        WeightedAutomaton {
            alphabet: self.alphabet.clone(),
            dim: self.dim,
            initial: self.final_weights.clone(),
            transitions: self.transitions.iter().map(Matrix::transpose).collect(),
            final_weights: self.initial.clone(),
        }
    }

    /// Conjugates by an invertible change of basis `P`:
    /// `u' = u P`, `mu'(a) = P^-1 mu(a) P`, `v' = P^-1 v`.
    pub fn change_basis(&self, p: &Matrix) -> Result<WeightedAutomaton> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.rows(),
            });
        }
        let p_inv = p.inverse()?;
        Ok(WeightedAutomaton {
            alphabet: self.alphabet.clone(),
            dim: self.dim,
            initial: row_times_matrix(&self.initial, p),
            transitions: self
                .transitions
                .iter()
                .map(|m| p_inv.mul(m).mul(p))
                .collect(),
            final_weights: matrix_times_col(&p_inv, &self.final_weights),
        })
    }

    /// Minimizes the automaton by alternating forward and backward
    /// reductions until both reachability spans are full (two passes
    /// suffice; the loop runs to a fixpoint regardless).
    ///
    /// The returned matrix maps row vectors of the original ambient space
    /// to the minimal one; it transports invariants: if `S` is an invariant
    /// of `self` then `S . map` is an invariant of the result with at most
    /// the same length and dimension.
    pub fn minimize(&self) -> (WeightedAutomaton, Matrix) {
        let mut cur = self.clone();
        let mut map = Matrix::identity(self.dim);
        loop {
            let left = cur.left_reach_basis();
            if left.dim() < cur.dim {
                let (next, step) = cur.left_reduce(&left);
                map = map.mul(&step);
                cur = next;
                continue;
            }
            let right = cur.right_reach_basis();
            if right.dim() < cur.dim {
                let (next, step) = cur.right_reduce(&right);
                map = map.mul(&step);
                cur = next;
                continue;
            }
            return (cur, map);
        }
    }

    /// Cuts the automaton down to the span of the forward reachability set.
    fn left_reduce(&self, span: &Subspace) -> (WeightedAutomaton, Matrix) {
        let r = span.dim();
        let b = span.complete_basis();
        let b_inv = b.inverse().expect("completed basis is invertible");
        // Row vectors in the span have coordinates supported on the first
        // r basis vectors, so truncation loses nothing on them.
        let map = b_inv.truncate_cols(r);
        let b_r = b.truncate_rows(r);
        let wa = WeightedAutomaton {
            alphabet: self.alphabet.clone(),
            dim: r,
            initial: row_times_matrix(&self.initial, &map),
            transitions: self
                .transitions
                .iter()
                .map(|m| b_r.mul(m).mul(&map))
                .collect(),
            final_weights: matrix_times_col(&b_r, &self.final_weights),
        };
        (wa, map)
    }

    /// Backward counterpart of `left_reduce`; `span` is the row-space form
    /// of the backward reachability set.
    fn right_reduce(&self, span: &Subspace) -> (WeightedAutomaton, Matrix) {
        let r = span.dim();
        let c = span.complete_basis();
        let c_inv = c.inverse().expect("completed basis is invertible");
        let c_r_t = c.truncate_rows(r).transpose(); // d x r
        let c_inv_cols_t = c_inv.truncate_cols(r).transpose(); // r x d
        let wa = WeightedAutomaton {
            alphabet: self.alphabet.clone(),
            dim: r,
            initial: row_times_matrix(&self.initial, &c_r_t),
            transitions: self
                .transitions
                .iter()
                .map(|m| c_inv_cols_t.mul(m).mul(&c_r_t))
                .collect(),
            final_weights: matrix_times_col(&c_inv_cols_t, &self.final_weights),
        };
        (wa, c_r_t)
    }

    /// Exact equivalence of the realized series, decided by building the
    /// difference automaton and checking that its reachability span is
    /// orthogonal to its final vector.
    pub fn equivalent(&self, other: &WeightedAutomaton) -> Result<bool> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let d = self.dim + other.dim;
        let mut initial = self.initial.clone();
        initial.extend_from_slice(&other.initial);
        let mut final_weights = self.final_weights.clone();
        final_weights.extend(other.final_weights.iter().map(|x| -x));
        let transitions = self
            .transitions
            .iter()
            .zip(&other.transitions)
            .map(|(a, b)| {
                let mut m = Matrix::zero(d, d);
                for r in 0..self.dim {
                    for c in 0..self.dim {
                        m.set(r, c, a.get(r, c).clone());
                    }
                }
                for r in 0..other.dim {
                    for c in 0..other.dim {
                        m.set(self.dim + r, self.dim + c, b.get(r, c).clone());
                    }
                }
                m
            })
            .collect();
        let diff = WeightedAutomaton {
            alphabet: self.alphabet.clone(),
            dim: d,
            initial,
            transitions,
            final_weights,
        };
        let reach = diff.left_reach_basis();
        Ok(reach
            .basis()
            .iter()
            .all(|row| vec_ops::dot(row, &diff.final_weights).is_zero()))
    }

    /// Syntactic sequentiality: the initial vector has exactly one nonzero
    /// entry and every row of every transition matrix has at most one.
    pub fn is_sequential(&self) -> bool {
        let nonzero = self.initial.iter().filter(|x| !x.is_zero()).count();
        if nonzero != 1 {
            return false;
        }
        self.transitions.iter().all(|m| {
            (0..m.rows()).all(|r| m.row(r).iter().filter(|x| !x.is_zero()).count() <= 1)
        })
    }
}

pub(crate) fn validate_alphabet(alphabet: &[String]) -> Result<()> {
    for (i, l) in alphabet.iter().enumerate() {
        if l.is_empty() || l.chars().any(char::is_whitespace) {
            return Err(Error::InvalidInput(format!("bad letter {l:?}")));
        }
        if l.contains(',') || l.starts_with('[') || l.contains(']') || l.starts_with('#') {
            return Err(Error::InvalidInput(format!("bad letter {l:?}")));
        }
        if alphabet[..i].contains(l) {
            return Err(Error::InvalidInput(format!("duplicate letter {l:?}")));
        }
    }
    Ok(())
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::linalg::vec_ops::int_vec;
    use proptest::prelude::*;

    fn pow2(n: u32) -> Scalar {
        let mut x = Scalar::one();
        for _ in 0..n {
            x = x * Scalar::from_int(2);
        }
        x
    }

    #[test]
    fn parity_eval() {
        let wa = parity_wa();
        assert_eq!(wa.eval(&wa.parse_word("aa").unwrap()), Scalar::from_int(4));
        assert_eq!(wa.eval(&wa.parse_word("a").unwrap()), Scalar::zero());
        assert_eq!(wa.eval(&[]), Scalar::one());
        for n in 0..12u32 {
            let word = vec![0; n as usize];
            let expect = if n % 2 == 0 { pow2(n) } else { Scalar::zero() };
            assert_eq!(wa.eval(&word), expect);
        }
    }

    #[test]
    fn geometric_sum_eval() {
        let wa = geometric_sum_wa();
        assert_eq!(wa.eval(&wa.parse_word("aaa").unwrap()), Scalar::from_int(15));
        for n in 0..12u32 {
            let word = vec![0; n as usize];
            assert_eq!(wa.eval(&word), pow2(n + 1) - Scalar::one());
        }
    }

    #[test]
    fn empty_word_is_u_dot_v() {
        let wa = geometric_sum_wa();
        assert_eq!(wa.eval(&[]), Scalar::from_int(1));
    }

    #[test]
    fn unknown_letter_is_reported() {
        let wa = parity_wa();
        assert_eq!(
            wa.parse_word("ab").unwrap_err(),
            Error::UnknownLetter("b".into())
        );
        assert_eq!(
            wa.eval_letters(&["b"]).unwrap_err(),
            Error::UnknownLetter("b".into())
        );
    }

    #[test]
    fn reach_bases() {
        assert!(parity_wa().left_reach_basis().is_full());
        assert!(geometric_sum_wa().left_reach_basis().is_full());
        assert_eq!(zero_wa().left_reach_basis().dim(), 0);
    }

    #[test]
    fn parity_is_already_minimal() {
        let wa = parity_wa();
        let (min, map) = wa.minimize();
        assert_eq!(min.dim(), 2);
        assert_eq!(map, Matrix::identity(2));
    }

    #[test]
    fn padded_automaton_minimizes_back() {
        // parity_wa with an extra coordinate unreachable from the start.
        let wa = WeightedAutomaton::new(
            vec!["a".into()],
            int_vec(&[1, 0, 0]),
            vec![Matrix::from_int_rows(&[&[0, 2, 0], &[2, 0, 0], &[0, 0, 1]])],
            int_vec(&[1, 0, 0]),
        )
        .unwrap();
        let (min, _) = wa.minimize();
        assert_eq!(min.dim(), 2);
        for n in 0..=8 {
            assert_eq!(min.eval(&vec![0; n]), wa.eval(&vec![0; n]));
        }
    }

    #[test]
    fn zero_series_minimizes_to_dimension_zero() {
        let (min, _) = zero_wa().minimize();
        assert_eq!(min.dim(), 0);
        assert_eq!(min.eval(&[0, 0]), Scalar::zero());
    }

    #[test]
    fn equivalence_basics() {
        let wa = parity_wa();
        assert!(wa.equivalent(&wa).unwrap());
        assert!(!wa.equivalent(&zero_wa()).unwrap());
        let two_letter = WeightedAutomaton::new(
            vec!["a".into(), "b".into()],
            int_vec(&[1]),
            vec![Matrix::identity(1), Matrix::identity(1)],
            int_vec(&[1]),
        )
        .unwrap();
        assert_eq!(
            wa.equivalent(&two_letter).unwrap_err(),
            Error::AlphabetMismatch
        );
    }

    #[test]
    fn equivalence_survives_change_of_basis() {
        let wa = parity_wa();
        let p = Matrix::from_int_rows(&[&[1, 2], &[1, 1]]);
        let conj = wa.change_basis(&p).unwrap();
        assert!(wa.equivalent(&conj).unwrap());
    }

    #[test]
    fn sequentiality_checks() {
        assert!(parity_wa().is_sequential());
        let branching = WeightedAutomaton::new(
            vec!["a".into()],
            int_vec(&[1, 0]),
            vec![Matrix::from_int_rows(&[&[1, 1], &[0, 1]])],
            int_vec(&[1, 1]),
        )
        .unwrap();
        assert!(!branching.is_sequential());
        let one_dim = WeightedAutomaton::new(
            vec!["a".into()],
            int_vec(&[1]),
            vec![Matrix::from_int_rows(&[&[3]])],
            int_vec(&[2]),
        )
        .unwrap();
        assert!(one_dim.is_sequential());
    }

    #[test]
    fn multi_letter_words() {
        let wa = WeightedAutomaton::new(
            vec!["ab".into(), "ba".into()],
            int_vec(&[1]),
            vec![
                Matrix::from_int_rows(&[&[2]]),
                Matrix::from_int_rows(&[&[3]]),
            ],
            int_vec(&[1]),
        )
        .unwrap();
        let word = wa.parse_word("[ab,ba,ab]").unwrap();
        assert_eq!(word, vec![0, 1, 0]);
        assert_eq!(wa.eval(&word), Scalar::from_int(12));
        assert_eq!(wa.format_word(&word), "[ab,ba,ab]");
    }

    // Random small automata for the behavioural properties.
    prop_compose! {
        fn small_wa()(dim in 1usize..=3, letters in 1usize..=2)
            (dim in Just(dim),
             letters in Just(letters),
             entries in proptest::collection::vec(-2i64..=2, (dim * dim * letters + 2 * dim).max(1)))
            -> WeightedAutomaton
        {
            let alphabet: Vec<String> = ["a", "b"][..letters].iter().map(|s| s.to_string()).collect();
            let mut it = entries.into_iter();
            let initial = (0..dim).map(|_| Scalar::from_int(it.next().unwrap())).collect();
            let transitions = (0..letters)
                .map(|_| {
                    Matrix::new(
                        dim,
                        dim,
                        (0..dim * dim).map(|_| Scalar::from_int(it.next().unwrap())).collect(),
                    )
                })
                .collect();
            let final_weights = (0..dim).map(|_| Scalar::from_int(it.next().unwrap())).collect();
            WeightedAutomaton::new(alphabet, initial, transitions, final_weights).unwrap()
        }
    }

    fn words_up_to(letters: usize, max_len: usize) -> Vec<Word> {
        let mut all: Vec<Word> = vec![Vec::new()];
        let mut layer: Vec<Word> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for a in 0..letters {
                    let mut w2 = w.clone();
                    w2.push(a);
                    next.push(w2);
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all
    }

    proptest! {
        #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

        #[test]
        fn minimize_preserves_series(wa in small_wa()) {
            let (min, _) = wa.minimize();
            prop_assert!(min.dim() <= wa.dim());
            for w in words_up_to(wa.alphabet().len(), 8) {
                prop_assert_eq!(min.eval(&w), wa.eval(&w));
            }
            let (again, _) = min.minimize();
            prop_assert_eq!(again.dim(), min.dim());
        }

        #[test]
        fn equivalence_matches_bounded_oracle(a in small_wa(), b in small_wa()) {
            prop_assume!(a.alphabet() == b.alphabet());
            let decided = a.equivalent(&b).unwrap();
            let oracle = words_up_to(a.alphabet().len(), a.dim() + b.dim())
                .iter()
                .all(|w| a.eval(w) == b.eval(w));
            prop_assert_eq!(decided, oracle);
        }

        #[test]
        fn minimization_transports_reachability(wa in small_wa()) {
            // Reach vectors of the original map into the minimal automaton
            // through the returned matrix, consistently with evaluation.
            let (min, map) = wa.minimize();
            for w in words_up_to(wa.alphabet().len(), 4) {
                let mut x = wa.initial().to_vec();
                let mut y = min.initial().to_vec();
                for &aa in &w {
                    x = row_times_matrix(&x, wa.transition(aa));
                    y = row_times_matrix(&y, min.transition(aa));
                }
                prop_assert_eq!(row_times_matrix(&x, &map), y);
            }
        }
    }
}
