use criterion::{criterion_group, criterion_main, Criterion};
use fermat_core::fermat::FermatContext;
use fermat_core::par::{self, Mode};

fn workloads(c: &mut Criterion) {
    for mode in [Mode::Sequential, Mode::Parallel] {
        let tag = format!("{mode:?}").to_lowercase();
        par::set_mode(mode);

        c.bench_function(&format!("symbolic_power_n4_m8/{tag}"), |b| {
            b.iter(|| {
                // fresh context each time so the intersection cache is cold
                let ctx = FermatContext::auto(4).unwrap();
                ctx.symbolic_power(8).unwrap().minimal_generator_degrees().unwrap()
            })
        });

        let ctx = FermatContext::auto(4).unwrap();
        let x3 = ctx.build_x3(2).unwrap();
        c.bench_function(&format!("x3_minors_n4_k2/{tag}"), |b| b.iter(|| x3.maximal_minors().unwrap()));

        c.bench_function(&format!("power_of_I3_n3/{tag}"), |b| {
            let ctx = FermatContext::auto(3).unwrap();
            let s3 = ctx.symbolic_power(3).unwrap();
            b.iter(|| s3.power(2).unwrap().groebner().unwrap())
        });
    }
    par::set_mode(Mode::Parallel);
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = workloads
}
criterion_main!(benches);
