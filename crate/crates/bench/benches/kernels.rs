use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use skein_cluster::bratteli::{build_diagram, DiagramKind};
use skein_cluster::cluster::{rank2_sequence, triangulation_matrix, Seed};
use skein_cluster::skein::torus_chain;
use skein_cluster::tl::{count_matchings, kauffman_bracket, BraidWord};
use skein_cluster::Vars;

fn laurent(c: &mut Criterion) {
    let x = Vars::cluster(2);
    let a = x.parse("(x1^2+x2^3+x1*x2^(-1)+1)^6").unwrap();
    let b = x.parse("(x1+x2^(-2)+3)^5").unwrap();
    let p = &a * &b;
    c.bench_function("laurent mul", |bch| bch.iter(|| black_box(&a) * black_box(&b)));
    c.bench_function("laurent div_exact", |bch| bch.iter(|| black_box(&p).div_exact(black_box(&b)).unwrap()));
}

fn cluster(c: &mut Criterion) {
    let mut g = c.benchmark_group("rank2_sequence");
    for (b, cc) in [(2, 2), (1, 4)] {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{b},{cc}")), &(b, cc), |bch, &(b, cc)| {
            bch.iter(|| rank2_sequence(b, cc, 10).unwrap())
        });
    }
    g.finish();
    let seed = Seed::initial(triangulation_matrix(1, 1).unwrap());
    c.bench_function("torus seed walk", |bch| bch.iter(|| seed.mutate_walk(black_box(&[0, 1, 2, 0, 1, 2])).unwrap()));
}

fn jones(c: &mut Criterion) {
    c.bench_function("torus_chain 20", |bch| bch.iter(|| torus_chain(black_box(20))));
    let mut g = c.benchmark_group("kauffman_bracket");
    for word in ["1,1,1", "1,-2,1,-2", "1,2,-3,1,2,-3,1,2"] {
        let w = BraidWord::parse(4, word).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(word), &w, |bch, w| bch.iter(|| kauffman_bracket(w).unwrap()));
    }
    g.finish();
}

fn combinatorics(c: &mut Criterion) {
    c.bench_function("count_matchings 12", |bch| bch.iter(|| count_matchings(black_box(12))));
    c.bench_function("truncated pascal 60", |bch| bch.iter(|| build_diagram(DiagramKind::TruncatedPascal, black_box(60)).unwrap()));
}

criterion_group!(benches, laurent, cluster, jones, combinatorics);
criterion_main!(benches);
