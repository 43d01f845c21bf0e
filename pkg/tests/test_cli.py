"""Command-line pipelines and their file formats."""

import pytest

from sdlabel.cli import BENCH_HEADER, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestPipelines:
    def test_gen_sd(self, tmp_path, capsys):
        g = tmp_path / "g.el"
        assert main(["gen", "--kind", "rook", "--a", "3", "--b", "3", "-o", str(g)]) == 0
        code, out, _ = run(capsys, "sd", "--exact", str(g))
        assert code == 0 and out.strip() == "4"

    def test_order_exact_on_cograph(self, tmp_path, capsys):
        g = tmp_path / "g.el"
        # C4 = K4 minus a matching: a cograph, exact witness at d = 0
        g.write_text("p el 4 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n")
        w = tmp_path / "w.ord"
        code, out, err = run(
            capsys, "order", "--d", "1", "--mode", "exact", str(g), "-o", str(w)
        )
        assert code == 0
        assert w.read_text().splitlines()[0] == "w sdd 0 3"

    def test_order_exact_respects_requested_level(self, tmp_path, capsys):
        g = tmp_path / "g.el"
        g.write_text("p el 4 3\ne 0 1\ne 1 2\ne 2 3\n")  # P4: sdd = 1
        code, out, err = run(capsys, "order", "--d", "0", "--mode", "exact", str(g))
        assert code == 1 and "above requested" in err

    def test_order_greedy_needs_d(self, tmp_path, capsys):
        g = tmp_path / "g.el"
        g.write_text("p el 2 1\ne 0 1\n")
        code, _, err = run(capsys, "order", "--mode", "greedy", str(g))
        assert code == 1 and "--d" in err

    def test_label_verify_decode(self, tmp_path, capsys):
        g = tmp_path / "g.el"
        wf = tmp_path / "w.ord"
        lf = tmp_path / "L.lbl"
        assert main(["gen", "--kind", "gnp", "--n", "10", "--p", "0.4",
                     "--seed", "5", "-o", str(g)]) == 0
        assert main(["order", "--mode", "exact", str(g), "-o", str(wf)]) == 0
        assert main(["label", str(g), str(wf), "-o", str(lf)]) == 0
        code, out, _ = run(capsys, "verify", str(g), str(lf))
        assert code == 0 and out.strip() == "OK 0 mismatches"
        code, out, _ = run(capsys, "decode", str(lf), "0", "1")
        from sdlabel import load_edge_list

        gg = load_edge_list(g.read_text())
        assert code == 0 and out.strip() == ("1" if gg.has_edge(0, 1) else "0")

    def test_verify_reports_mismatches(self, tmp_path, capsys):
        g = tmp_path / "g.el"
        wf = tmp_path / "w.ord"
        lf = tmp_path / "L.lbl"
        main(["gen", "--kind", "gnp", "--n", "8", "--p", "0.5", "--seed", "2",
              "-o", str(g)])
        main(["order", "--mode", "exact", str(g), "-o", str(wf)])
        main(["label", str(g), str(wf), "-o", str(lf)])
        # tamper with the graph: flip one edge
        from sdlabel import load_edge_list, save_edge_list

        gg = load_edge_list(g.read_text())
        if gg.has_edge(0, 1):
            gg.adj[0].discard(1)
            gg.adj[1].discard(0)
        else:
            gg.add_edge(0, 1)
        g.write_text(save_edge_list(gg))
        code, out, _ = run(capsys, "verify", str(g), str(lf))
        assert code == 1 and out.strip() == "FAIL 1 mismatches"

    def test_model_clean_balance_round_trip(self, tmp_path, capsys):
        g = tmp_path / "g.el"
        wf = tmp_path / "w.ord"
        m1 = tmp_path / "m.stm"
        m2 = tmp_path / "b.stm"
        main(["gen", "--kind", "gnp", "--n", "9", "--p", "0.3", "--seed", "4",
              "-o", str(g)])
        main(["order", "--mode", "exact", str(g), "-o", str(wf)])
        assert main(["model", str(g), str(wf), "-o", str(m1)]) == 0
        assert main(["clean", str(m1), "-o", str(m1)]) == 0
        assert main(["balance", str(m1), "-o", str(m2)]) == 0
        assert m2.read_text().splitlines()[0].endswith("complete 1")
        from sdlabel import load_edge_list
        from sdlabel.model import load_stm, realize

        assert realize(load_stm(m2.read_text())) == load_edge_list(g.read_text())

    def test_reduce_and_witness(self, tmp_path, capsys):
        cnf = tmp_path / "f.cnf"
        cnf.write_text("p cnf 4 3\n1 -3 4 0\n-2 3 -4 0\n-1 2 0\n")
        out_el = tmp_path / "r.el"
        roles = tmp_path / "r.roles"
        assert main(["reduce", "--target", "sd", "--d", "8", str(cnf),
                     "-o", str(out_el), "--roles", str(roles)]) == 0
        assert out_el.read_text().startswith("p el 782 ")
        assert roles.read_text().splitlines()[0] == "r 0 lit:+1"
        code, out, _ = run(capsys, "witness", "--target", "sd", "--d", "8", str(cnf))
        assert code == 0 and out.splitlines()[0] == "p div 8 778"

    def test_witness_sdd(self, tmp_path, capsys):
        cnf = tmp_path / "f.cnf"
        cnf.write_text("p cnf 4 3\n1 2 3 0\n-1 -2 4 0\n2 -3 -4 0\n")
        wfile = tmp_path / "w.ord"
        gfile = tmp_path / "g.el"
        assert main(["reduce", "--target", "sdd", str(cnf), "-o", str(gfile)]) == 0
        assert main(["witness", "--target", "sdd", str(cnf), "-o", str(wfile)]) == 0
        from sdlabel import check_witness, load_edge_list, load_witness

        g = load_edge_list(gfile.read_text())
        w = load_witness(wfile.read_text())
        assert w.d == 1 and check_witness(g, w)

    def test_witness_sd_unsat(self, tmp_path, capsys):
        cnf = tmp_path / "f.cnf"
        clauses = "\n".join(
            " ".join(str((v + 1) * s) for v, s in zip(range(2), signs)) + " 0"
            for signs in [(1, 1), (1, -1), (-1, 1), (-1, -1)]
        )
        cnf.write_text(f"p cnf 2 4\n{clauses}\n")
        code, _, err = run(capsys, "witness", "--target", "sd", "--d", "8", str(cnf))
        assert code == 1 and "unsatisfiable" in err


class TestBench:
    def test_empty_config(self, tmp_path, capsys):
        cfg = tmp_path / "b.cfg"
        cfg.write_text("# nothing\n")
        code, out, _ = run(capsys, "bench", str(cfg))
        assert code == 0 and out == BENCH_HEADER + "\n"

    def test_deterministic(self, tmp_path):
        cfg = tmp_path / "b.cfg"
        cfg.write_text("embed 32 1 7\nrook 16 0 0\nshift 6 0 0\n")
        out1 = tmp_path / "a.csv"
        out2 = tmp_path / "b.csv"
        assert main(["bench", str(cfg), "-o", str(out1)]) == 0
        assert main(["bench", str(cfg), "-o", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_row_shape(self, tmp_path, capsys):
        cfg = tmp_path / "b.cfg"
        cfg.write_text("embed 32 1 3\n")
        code, out, _ = run(capsys, "bench", str(cfg))
        lines = out.splitlines()
        assert lines[0] == BENCH_HEADER
        fields = lines[1].split(",")
        assert fields[0] == "embed" and fields[1] == "32" and fields[2] == "1"


class TestUsage:
    def test_unknown_verb(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_missing_required(self, capsys):
        assert main(["gen"]) == 2

    def test_domain_error_is_one(self, tmp_path, capsys):
        g = tmp_path / "g.el"
        g.write_text("p el 2 1\ne 0 0\n")
        code, _, err = run(capsys, "sd", "--exact", str(g))
        assert code == 1 and "self-loop" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "sd", "--exact", "/nonexistent/path.el")
        assert code == 1
