use criterion::{criterion_group, criterion_main, Criterion};

use qtop_core::fixtures::{framed_hopf_link, framed_unknot, FILES};
use qtop_core::hopf::QuantumGroup;
use qtop_core::nonsemisimple::{center_dim, hennings_invariant, renormalized_all_cuts};
use qtop_core::semisimple::{rt_invariant, smatrix};
use qtop_core::tangle::parse_diagram;
use qtop_core::verify::axioms;

fn scalars(c: &mut Criterion) {
    let h = QuantumGroup::new(5).unwrap();
    let fl = h.field();
    let (x, y) = (fl.qint(3), &fl.gauss_sqrt_r() + &fl.q());
    c.bench_function("scalar mul r=5", |b| b.iter(|| &x * &y));
    c.bench_function("scalar inv r=5", |b| b.iter(|| y.inv().unwrap()));
}

fn hopf(c: &mut Criterion) {
    let h = QuantumGroup::new(3).unwrap();
    c.bench_function("Yang-Baxter r=3", |b| b.iter(|| axioms::yang_baxter(h)));
    let h5 = QuantumGroup::new(5).unwrap();
    let mut g = c.benchmark_group("slow");
    g.sample_size(10);
    g.bench_function("ribbon identities r=5", |b| b.iter(|| axioms::ribbon_identities(h5)));
    g.bench_function("center dimension r=5", |b| b.iter(|| center_dim(h5)));
    g.finish();
}

fn invariants(c: &mut Criterion) {
    let h = QuantumGroup::new(5).unwrap();
    c.bench_function("S-matrix r=5", |b| b.iter(|| smatrix(h).unwrap()));
    let lens = parse_diagram(&framed_unknot(3)).unwrap();
    c.bench_function("RT L(3,1) r=5", |b| b.iter(|| rt_invariant(h, &lens).unwrap()));
    c.bench_function("Hennings L(3,1) r=5", |b| b.iter(|| hennings_invariant(h, &lens).unwrap()));
    let mut g = c.benchmark_group("slow");
    g.sample_size(10);
    let hopf = parse_diagram(&framed_hopf_link(2, 1)).unwrap();
    g.bench_function("Hennings Hopf link r=5", |b| b.iter(|| hennings_invariant(h, &hopf).unwrap()));
    let h3 = QuantumGroup::new(3).unwrap();
    let text = FILES.iter().find(|(n, _)| *n == "hopf_P0_P0.tg").unwrap().1;
    let d = parse_diagram(text).unwrap();
    g.bench_function("L′ all cuts Hopf(P0,P0) r=3", |b| b.iter(|| renormalized_all_cuts(h3, &d).unwrap()));
    g.finish();
}

criterion_group!(benches, scalars, hopf, invariants);
criterion_main!(benches);
