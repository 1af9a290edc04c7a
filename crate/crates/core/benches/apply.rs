use criterion::{criterion_group, criterion_main, Criterion};
use oqsim_core::{Circuit, GateDurations, StateVector, SystemLayout};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn bench_apply(c: &mut Criterion) {
    let layout = SystemLayout::new(&[7, 7, 7, 7], 2).unwrap();
    let durations = GateDurations::default();
    let mut circuit = Circuit::new(layout.clone(), durations);
    for m in 0..4 {
        circuit
            .push(oqsim_core::Gate::Beamsplitter {
                mode_a: m,
                mode_b: (m + 1) % 4,
                phi: 0.3,
                theta: 0.7,
            })
            .unwrap();
        circuit
            .push(oqsim_core::Gate::CondRotation { qubit: m % 2, mode: m, theta: 0.4 })
            .unwrap();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let base = StateVector::random(&layout, &mut rng);

    let mut group = c.benchmark_group("gate_application");
    group.bench_function("default_path", |b| {
        b.iter(|| {
            let mut state = base.clone();
            circuit.apply_to(&mut state).unwrap();
            state.norm()
        })
    });
    group.bench_function("sequential_path", |b| {
        b.iter(|| {
            let mut state = base.clone();
            circuit.apply_to_sequential(&mut state).unwrap();
            state.norm()
        })
    });
    group.finish();
}

criterion_group!(benches, bench_apply);
criterion_main!(benches);
