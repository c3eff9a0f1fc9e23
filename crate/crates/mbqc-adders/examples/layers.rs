fn main() {
    for n in [2usize, 4, 8, 16, 32, 64, 128] {
        let q = mbqc_adders::build_qcla_adder(n).unwrap();
        let r = mbqc_adders::build_ripple_adder(n).unwrap();
        println!(
            "n={:4} qcla_layers={:4} ripple_layers={:4} qcla_qubits={:4} qcla_gates={:5}",
            n,
            mbqc_adders::circuit::toffoli_layer_count(&q),
            mbqc_adders::circuit::toffoli_layer_count(&r),
            q.n_qubits,
            q.gates.len()
        );
    }
}
