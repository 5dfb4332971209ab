use symcone::macdonald::*;
use symcone::partitions::Partition;

fn main() {
    for d in 1..=4u32 {
        eprintln!("onerow d={d} start");
        let f = mac_onerow_two_vars(d);
        eprintln!("onerow d={d} done terms={}", f.num_terms());
        let direct = mac_p(&Partition::new(&[d]), 2).unwrap().expansion;
        eprintln!("direct d={d} done eq={}", f == direct);
    }
}
