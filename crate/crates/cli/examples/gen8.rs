use std::time::Instant;
fn main() {
    let t = Instant::now();
    let graphs = domprism::gen::all_graphs(8);
    let connected = graphs.iter().filter(|g| g.is_connected()).count();
    println!("order 8: all={} connected={} [{:?}]", graphs.len(), connected, t.elapsed());
}
