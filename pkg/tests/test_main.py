#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
명령행 인터페이스 테스트

이 모듈은 main() 하위 명령의 출력, 생성 파일, 종료 코드를 테스트합니다.
"""

import contextlib
import io
import json
import os
import shutil
import sys
import tempfile
import unittest

# 상위 디렉토리 추가하여 모듈 임포트 가능하게 함
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import main as cli
from core.models import POSITIVE, Example
from dataset_io.artifact_store import load_artifacts, load_diagnostics
from dataset_io.corpus_loader import load_annotated, save_annotated


class TestMain(unittest.TestCase):
    """main() 테스트 클래스"""

    def setUp(self):
        """테스트 설정"""
        self.temp_dir = tempfile.mkdtemp()
        self.corpus_path = self.path("corpus.txt")
        lines = ["SMS_%d" % i for i in range(100, 140)]
        lines += ["ab_%d" % i for i in range(10, 40)]
        lines += ["abc!!", "#1"]
        self.write(self.corpus_path, "\n".join(lines) + "\n")

    def tearDown(self):
        """테스트 정리"""
        shutil.rmtree(self.temp_dir)

    def path(self, name):
        return os.path.join(self.temp_dir, name)

    def write(self, path, text):
        with open(path, "w", encoding="utf-8", newline="") as file:
            file.write(text)

    def run_main(self, *argv):
        """main을 실행하고 (종료 코드, stdout, stderr)를 반환합니다."""
        stdout, stderr = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            code = cli.main(list(argv))
        return code, stdout.getvalue(), stderr.getvalue()

    def test_abstract(self):
        code, out, _ = self.run_main("abstract", "SMS_123456")
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(out.strip(), "X_d")

    def test_abstract_empty_string_is_usage_error(self):
        code, _, _ = self.run_main("abstract", "")
        self.assertEqual(code, cli.EXIT_USAGE)

    def test_usage_errors(self):
        self.assertEqual(self.run_main()[0], cli.EXIT_USAGE)
        self.assertEqual(self.run_main("unknown")[0], cli.EXIT_USAGE)
        self.assertEqual(self.run_main("generate")[0], cli.EXIT_USAGE)
        self.assertEqual(self.run_main("experiment", "x", "--learning-sizes", "a,b")[0], cli.EXIT_USAGE)

    def test_empty_corpus(self):
        empty = self.path("empty.txt")
        self.write(empty, "")
        code, _, err = self.run_main("generate", empty)
        self.assertEqual(code, cli.EXIT_DATA)
        self.assertIn("empty corpus", err)

    def test_missing_corpus(self):
        code, _, _ = self.run_main("generate", self.path("missing.txt"))
        self.assertEqual(code, cli.EXIT_DATA)

    def test_generate_stdout(self):
        code, out, _ = self.run_main("generate", self.corpus_path)
        self.assertEqual(code, cli.EXIT_OK)
        records = [json.loads(line) for line in out.splitlines()]
        self.assertEqual([record["metaparam"] for record in records], ["X_d", "x_d"])

    def test_generate_output_and_diagnostics(self):
        output, diagnostics = self.path("out/artifacts.jsonl"), self.path("out/diag.jsonl")
        code, out, _ = self.run_main(
            "generate", self.corpus_path, "--output", output, "--diagnostics", diagnostics
        )
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(out.splitlines()[0].split("\t")[:3], ["1", "X_d", "40"])
        self.assertEqual(len(load_artifacts(output)), 2)

        records = load_diagnostics(diagnostics)
        self.assertEqual(records[0]["type"], "summary")
        self.assertEqual(records[0]["knee_rank"], 2)
        self.assertEqual(len(records), 5)

    def test_generate_dominant_cluster_filters_single_outlier(self):
        """지배적인 클러스터 하나와 이상치 하나면 이상치만 걸러냄"""
        corpus = self.path("dominant.txt")
        self.write(corpus, "".join("SMS_1%02d\n" % i for i in range(100)) + "abc!!\n")
        output, diagnostics = self.path("dominant.jsonl"), self.path("dominant_diag.jsonl")
        code, _, _ = self.run_main("generate", corpus, "--output", output, "--diagnostics", diagnostics)
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual([artifact.source_metaparam.pattern for artifact in load_artifacts(output)], ["X_d"])

        records = load_diagnostics(diagnostics)
        self.assertEqual(records[0]["knee_rank"], 1)
        self.assertEqual(records[0]["chord"], "origin")
        rows = {record["metaparam"]: record for record in records[1:]}
        self.assertTrue(rows["X_d"]["retained"])
        self.assertFalse(rows["x!"]["retained"])

    def test_generate_knee_override(self):
        output = self.path("artifacts.jsonl")
        code, out, _ = self.run_main("generate", self.corpus_path, "--knee-override", "3", "--output", output)
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(len(out.splitlines()), 3)

        code, _, err = self.run_main("generate", self.corpus_path, "--knee-override", "10")
        self.assertEqual(code, cli.EXIT_DATA)
        self.assertIn("error:", err)

    def test_generate_is_byte_identical_across_workers(self):
        first, second = self.path("w1.jsonl"), self.path("w4.jsonl")
        self.assertEqual(self.run_main("generate", self.corpus_path, "--workers", "1", "--output", first)[0], 0)
        self.assertEqual(self.run_main("generate", self.corpus_path, "--workers", "4", "--output", second)[0], 0)
        with open(first, "rb") as a, open(second, "rb") as b:
            self.assertEqual(a.read(), b.read())

    def test_generate_plot(self):
        plot = self.path("cdf.png")
        code, _, _ = self.run_main("generate", self.corpus_path, "--plot", plot)
        self.assertEqual(code, cli.EXIT_OK)
        self.assertGreater(os.path.getsize(plot), 0)

    def test_evaluate(self):
        artifacts = self.path("artifacts.jsonl")
        self.run_main("generate", self.corpus_path, "--output", artifacts)

        dataset = self.path("dataset.jsonl")
        docs = [
            Example(raw="SMS_123", label=POSITIVE, span="SMS_123", context_left="code ", context_right=" sent", doc_id="a"),
            Example(raw="hello", label=POSITIVE, span="hello", context_left="say ", context_right="", doc_id="b"),
        ]
        save_annotated(dataset, docs)

        report_path = self.path("report.json")
        code, out, _ = self.run_main("evaluate", artifacts, dataset, "--output", report_path)
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn("correct: 1", out)
        self.assertIn("recall: 0.5000", out)
        with open(report_path, encoding="utf-8") as file:
            self.assertEqual(json.load(file)["positives"], 2)

    def test_evaluate_with_no_matches(self):
        artifacts = self.path("artifacts.jsonl")
        self.run_main("generate", self.corpus_path, "--output", artifacts)
        dataset = self.path("dataset.jsonl")
        save_annotated(dataset, [Example(raw="(021)5", label=POSITIVE, span="(021)5", context_left="", context_right="")])

        code, out, _ = self.run_main("evaluate", artifacts, dataset)
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn("precision: 0.0000", out)
        self.assertIn("f_measure: 0.0000", out)

    def test_evaluate_malformed_dataset(self):
        artifacts = self.path("artifacts.jsonl")
        self.run_main("generate", self.corpus_path, "--output", artifacts)
        dataset = self.path("bad.jsonl")
        self.write(dataset, '{"span": "x", "label": "pos"}\n')

        code, _, err = self.run_main("evaluate", artifacts, dataset)
        self.assertEqual(code, cli.EXIT_DATA)
        self.assertIn("context_left", err)

    def test_evaluate_tsv(self):
        artifacts = self.path("artifacts.jsonl")
        self.run_main("generate", self.corpus_path, "--output", artifacts)
        dataset = self.path("dataset.tsv")
        self.write(dataset, "pos\tcode \tSMS_125\t sent\nneg\tno \tcode\t here\n")

        code, out, _ = self.run_main("evaluate", artifacts, dataset, "--format", "tsv")
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn("f_measure: 1.0000", out)

    def test_synthesize_and_experiment(self):
        spec = self.path("spec.yaml")
        self.write(spec, "inlier_patterns: [phone]\ninlier_count: 80\nseed: 3\n")
        corpus, annotated = self.path("syn.txt"), self.path("syn.jsonl")

        code, _, _ = self.run_main("synthesize", spec, "--output", corpus, "--annotated", annotated)
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(len(load_annotated(annotated)), 80)

        results = self.path("results.csv")
        code, out, _ = self.run_main(
            "experiment", annotated, "--learning-sizes", "25,40", "--repeats", "1", "--output", results
        )
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn("f_measure", out)
        self.assertTrue(os.path.exists(results))

    def test_synthesize_invalid_spec(self):
        spec = self.path("spec.yaml")
        self.write(spec, "inlier_patterns: [phone]\ninlier_count: 0\n")
        self.assertEqual(self.run_main("synthesize", spec)[0], cli.EXIT_DATA)

    def test_convert(self):
        src, dst = self.path("data.tsv"), self.path("data.jsonl")
        self.write(src, "pos\tcall \t(021)5\t now\n\n0\tsee \tx\t y\n")
        code, out, _ = self.run_main("convert", src, dst)
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn("2 records", out)
        self.assertEqual(len(load_annotated(dst)), 2)

    def test_config_file(self):
        config = self.path("config.yaml")
        self.write(config, "generation:\n  knee_override: 1\n")
        code, out, _ = self.run_main("--config", config, "generate", self.corpus_path)
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(len(out.splitlines()), 1)

        self.write(config, "- not\n- a mapping\n")
        self.assertEqual(self.run_main("--config", config, "abstract", "a")[0], cli.EXIT_DATA)


if __name__ == "__main__":
    unittest.main()
