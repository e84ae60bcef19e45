//! Friedman mean ranks of a small results table.
use real_opt::harness::RankTable;

const TABLE: &str = "\
problem,A,B,C
f1,1e-3,2e-3,2e-3
f2,10.5,9.0,11.0
f3,0.0,0.0,1.0
";

fn main() -> real_opt::Result<()> {
    let table = RankTable::from_csv(TABLE.as_bytes())?;
    for (alg, rank) in table.algorithms.iter().zip(table.friedman()?) {
        println!("{alg}: {rank:.4}");
    }
    Ok(())
}
