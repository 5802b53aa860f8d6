use ctdriving::{C64, CMatrix, HermitianOperator};
use std::time::Instant;

fn main() {
    for dim in [101usize, 256, 401, 1024] {
        // real pentadiagonal-ish (LMG-like)
        let m = CMatrix::from_fn(dim, dim, |i, j| {
            let d = i.abs_diff(j);
            if d == 0 { C64::new(i as f64, 0.0) }
            else if d == 2 { C64::new(1.0 + (i + j) as f64 / dim as f64, 0.0) }
            else { C64::new(0.0, 0.0) }
        });
        let h = HermitianOperator::hermitized(m).unwrap();
        let t = Instant::now();
        let d = h.eigendecompose_auto().unwrap();
        let dt = t.elapsed();
        println!("real   dim {dim}: {:?} ({} groups)", dt, d.groups().len());

        if dim <= 512 {
            let m = CMatrix::from_fn(dim, dim, |i, j| {
                let d = i.abs_diff(j);
                if d == 0 { C64::new(i as f64, 0.0) }
                else if d <= 2 { C64::new(1.0, 0.3 * (i as f64 - j as f64)) }
                else { C64::new(0.0, 0.0) }
            });
            let h = HermitianOperator::hermitized(m).unwrap();
            let t = Instant::now();
            let d = h.eigendecompose_auto().unwrap();
            let dt = t.elapsed();
            println!("complex dim {dim}: {:?} ({} groups)", dt, d.groups().len());
        }
    }
}
