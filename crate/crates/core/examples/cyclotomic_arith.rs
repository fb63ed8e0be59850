//! Exact arithmetic in cyclotomic fields.

use realforms::CycloNum;

fn main() -> realforms::Result<()> {
    let z5 = CycloNum::zeta(5)?;
    let sum = (0..5).try_fold(CycloNum::zero(), |acc, k| Ok::<_, realforms::Error>(&acc + &z5.pow(k)?))?;
    println!("1 + z5 + ... + z5^4 = {sum}");

    // mixing orders lifts both operands to a common field
    let w = &CycloNum::zeta(3)? + &CycloNum::i();
    println!("zeta(3) + i = {w}  (order {})", w.order());
    println!("|zeta(3) + i|^2 = {}", w.norm_sq());
    println!("1 / (zeta(3) + i) = {}", w.inv()?);

    for x in [CycloNum::from_int(2), CycloNum::from_int(-3), CycloNum::i(), CycloNum::from_ratio(-9, 4)] {
        let r = x.sqrt()?;
        println!("sqrt({x}) = {r}, squared back: {}", &r * &r);
    }

    let g = &CycloNum::from_ratio(3, 5) + &(&CycloNum::from_ratio(4, 5) * &CycloNum::i());
    let r = g.sqrt()?;
    println!("sqrt({g}) = {r}");
    println!("{}", serde_json::to_string(&r).expect("serializable"));
    Ok(())
}
