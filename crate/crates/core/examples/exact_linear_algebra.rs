//! Rank, kernels and linear systems over Q and a prime field.

use dualcheck::linalg::{ExactMatrix, Field};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for field in [Field::Rationals, Field::prime(7)?] {
        let m = ExactMatrix::from_rows(
            field,
            vec![
                vec![field.parse("1/2")?, field.from_i64(1), field.from_i64(3)],
                vec![field.from_i64(1), field.from_i64(2), field.from_i64(6)],
                vec![field.from_i64(0), field.from_i64(1), field.parse("-2/3")?],
            ],
        )?;
        let k = m.kernel_basis();
        println!("over {field}: rank {}, kernel dimension {}", m.rank(), k.cols());
        assert!(m.mul(&k).is_zero());

        let b = ExactMatrix::column_vector(field, vec![field.from_i64(1), field.from_i64(2), field.from_i64(5)]);
        match m.solve(&b)? {
            Some(x) => println!("  solution {:?}", x.column(0).iter().map(|s| s.to_text()).collect::<Vec<_>>()),
            None => println!("  no solution"),
        }
    }
    Ok(())
}
