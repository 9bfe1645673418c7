use std::time::Instant;
fn main() {
    let host = triples::generators::bose(9).unwrap();
    let tri = triples::catalog::triangle();
    let t0 = Instant::now();
    let r = triples::ramsey::exhaustive_census(&host, 2, &tri, "triangle").unwrap();
    println!("STS(9) t=2 triangle: {} ({:?})", r.to_table(), t0.elapsed());
    // also wicket at t=1 on STS(9)
    let w = triples::catalog::wicket();
    let r2 = triples::ramsey::exhaustive_census(&host, 1, &w, "wicket").unwrap();
    println!("STS(9) t=1 wicket all_mono={:?}", r2.entries[0].all_colorings_mono);
}
