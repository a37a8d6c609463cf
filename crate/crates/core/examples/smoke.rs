use fbrank_core::groebner::*;
use fbrank_core::systems::*;

fn main() {
    let full = make_i(1);
    let fu = &full.universe;
    let fops: Vec<_> = full.generators.iter().map(|g| g.op.to_r_mode()).collect();
    let t0 = std::time::Instant::now();
    let rank = holonomic_rank(fu, &fops, &Budget::new(50000));
    println!("rank(full I, n=1) = {:?} in {:?}", rank, t0.elapsed());
}
