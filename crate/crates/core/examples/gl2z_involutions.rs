//! Conjugacy classes of involutions in GL2(Z).

use realforms::autgroup::{gl2z_involution_class, Gl2z};

fn main() -> realforms::Result<()> {
    let samples = [[1, 3, 0, -1], [-1, 0, 4, 1], [-1, 0, 5, 1], [0, 1, 1, 0], [-1, 0, 0, -1], [7, -12, 4, -7]];
    for [a, b, c, d] in samples {
        let m = Gl2z::new(a, b, c, d)?;
        let (class, p) = gl2z_involution_class(&m)?;
        assert_eq!(p.inverse().mul(&m).mul(&p), class.matrix());
        println!("{m:<16} {class:<8} P = {p}");
    }
    Ok(())
}
