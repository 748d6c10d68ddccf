use std::time::Instant;
use wahull::linalg::vec_ops::int_vec;
use wahull::linalg::Matrix;
use wahull::invariant::{compute_invariant, InvariantOptions};
use wahull::zariski::Mode;
use wahull::WeightedAutomaton;

fn main() {
    let wa = WeightedAutomaton::new(
        vec!["a".into()],
        int_vec(&[1, 2]),
        vec![Matrix::from_int_rows(&[&[1, 0], &[1, 2]])],
        int_vec(&[1, 0]),
    )
    .unwrap();
    for c in [4usize, 8, 12, 16] {
        let t = Instant::now();
        let rep = compute_invariant(&wa, c, Mode::Linear, &InvariantOptions::default()).unwrap();
        println!("c={c} total {:?} stats {:?} len {}", t.elapsed(), rep.stats, rep.result.length());
    }
}
