#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
정규식 학습기 메인 모듈

이 모듈은 다음 명령을 제공합니다:
1. generate: 코퍼스에서 클러스터별 정규식 아티팩트와 진단 정보 생성
2. evaluate: 아티팩트를 주석 데이터셋에 적용하여 정밀도/재현율/F-measure 계산
3. abstract: 문자열 하나의 MetaParam 출력
4. experiment: 학습 크기별 실험
5. synthesize: 합성 잡음 코퍼스 생성
6. convert: 탭 구분 주석 파일을 JSON 주석 데이터셋으로 변환

종료 코드: 0 성공, 1 사용법 오류, 2 데이터 오류, 3 내부 불변식 위반
"""

import argparse
import copy
import json
import logging
import logging.handlers
import os
import sys
from typing import Any, Dict, List, Optional

import yaml

# 내부 모듈 임포트
sys.path.append(os.path.dirname(os.path.abspath(__file__)))
from abstraction.metaparam import transform_and_compress
from core.exceptions import DataError, InvalidSpec, InvariantViolation
from dataset_io.artifact_store import artifact_record, format_report, load_artifacts, write_artifacts, write_diagnostics, write_report
from dataset_io.corpus_loader import load_annotated, load_corpus, save_annotated, save_corpus
from dataset_io.relie_converter import convert_relie_tsv, load_relie_tsv
from dataset_io.synthetic_generator import generate_synthetic, load_synthetic_spec
from evaluation.evaluator import run_extraction, score
from evaluation.experiment import run_learning_experiment
from regex_generation.generator_manager import DEFAULT_GENERATION_CONFIG, RegexGenerationManager

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3

DEFAULT_CONFIG_PATH = os.path.join("config", "config.yaml")
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

DEFAULT_CONFIG: Dict[str, Any] = {
    "generation": dict(DEFAULT_GENERATION_CONFIG),
    "evaluation": {"dataset_format": "jsonl"},
    "experiment": {
        "learning_sizes": [25, 50, 100],
        "test_ratio": 0.5,
        "seed": 42,
        "repeats": 1,
    },
    "logging": {
        "level": "WARNING",
        "file": None,
        "max_size": 10485760,
        "backup_count": 5,
    },
}


class UsageArgumentParser(argparse.ArgumentParser):
    """사용법 오류 시 종료 코드 1로 끝나는 ArgumentParser"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """중첩 딕셔너리를 병합합니다 (override 우선)."""
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    설정 파일을 로드하여 기본 설정 위에 병합합니다.

    Args:
        config_path: 설정 파일 경로 (없으면 config/config.yaml이 있을 때만 사용)

    Returns:
        병합된 설정 딕셔너리
    """
    if config_path is None:
        if not os.path.exists(DEFAULT_CONFIG_PATH):
            return copy.deepcopy(DEFAULT_CONFIG)
        config_path = DEFAULT_CONFIG_PATH
    try:
        with open(config_path, 'r', encoding='utf-8') as file:
            loaded = yaml.safe_load(file) or {}
    except yaml.YAMLError as e:
        logger.error(f"설정 파일 로드 중 오류 발생: {e}")
        raise InvalidSpec(f"설정 파일을 해석할 수 없습니다: {config_path}") from e
    if not isinstance(loaded, dict):
        raise InvalidSpec(f"설정 파일은 매핑이어야 합니다: {config_path}")
    return deep_merge(DEFAULT_CONFIG, loaded)


def setup_logging(logging_config: Dict[str, Any], level_override: Optional[str] = None) -> None:
    """
    루트 로거를 설정합니다. 로그는 stderr와 (설정 시) 회전 로그 파일로만 나갑니다.

    Args:
        logging_config: logging 설정 섹션
        level_override: --log-level 값
    """
    level_name = (level_override or logging_config.get("level") or "WARNING").upper()
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()
    root.setLevel(getattr(logging, level_name, logging.WARNING))

    formatter = logging.Formatter(LOG_FORMAT)
    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(formatter)
    root.addHandler(stream_handler)

    log_file = logging_config.get("file")
    if log_file:
        directory = os.path.dirname(log_file)
        if directory and not os.path.exists(directory):
            os.makedirs(directory)
        file_handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=int(logging_config.get("max_size", 10485760)),
            backupCount=int(logging_config.get("backup_count", 5)),
            encoding="utf-8",
        )
        file_handler.setFormatter(formatter)
        root.addHandler(file_handler)


def parse_sizes(text: str) -> List[int]:
    """쉼표로 구분된 학습 크기 목록을 읽습니다."""
    try:
        sizes = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"정수 목록이 아닙니다: {text!r}")
    if not sizes:
        raise argparse.ArgumentTypeError("학습 크기가 비어 있습니다")
    return sizes


def build_parser() -> UsageArgumentParser:
    """명령행 파서를 만듭니다."""
    parser = UsageArgumentParser(prog="regex-learner", description='잡음이 섞인 예제로부터 정규식 학습')
    parser.add_argument('--config', default=None, help='설정 파일 경로 (기본: config/config.yaml)')
    parser.add_argument('--log-level', default=None, choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'], help='로그 레벨')
    subparsers = parser.add_subparsers(dest='command', parser_class=UsageArgumentParser)
    subparsers.required = True

    generate = subparsers.add_parser('generate', help='코퍼스에서 정규식 생성')
    generate.add_argument('corpus', help='코퍼스 파일 (한 줄에 예제 하나)')
    generate.add_argument('--knee-override', type=int, default=None, help='수동 knee 순위')
    generate.add_argument('--flatness-eps', type=float, default=None, help='평탄 분포 허용치 (기본 0.01)')
    generate.add_argument('--lazy', action='store_true', default=None, help='비탐욕 수량자 사용')
    generate.add_argument('--bounded-star', action='store_true', default=None, help='"*" 대신 {0,max} 사용')
    generate.add_argument('--workers', type=int, default=None, help='병렬 작업 스레드 수')
    generate.add_argument('--output', default=None, help='아티팩트 파일 경로 (없으면 stdout)')
    generate.add_argument('--diagnostics', default=None, help='진단 파일 경로')
    generate.add_argument('--plot', default=None, help='누적 분포 그림 파일 경로 (png)')

    evaluate = subparsers.add_parser('evaluate', help='아티팩트로 주석 데이터셋 평가')
    evaluate.add_argument('artifacts', help='아티팩트 파일')
    evaluate.add_argument('dataset', help='주석 데이터셋 파일')
    evaluate.add_argument('--format', dest='dataset_format', choices=['jsonl', 'tsv'], default=None, help='데이터셋 형식')
    evaluate.add_argument('--workers', type=int, default=None, help='병렬 작업 스레드 수')
    evaluate.add_argument('--output', default=None, help='평가 리포트 JSON 파일 경로')

    abstract = subparsers.add_parser('abstract', help='문자열의 MetaParam 출력')
    abstract.add_argument('string', help='변환할 문자열')

    experiment = subparsers.add_parser('experiment', help='학습 크기별 실험')
    experiment.add_argument('dataset', help='주석 데이터셋 파일')
    experiment.add_argument('--learning-sizes', type=parse_sizes, default=None, help='학습 크기 목록 (예: 25,50,100)')
    experiment.add_argument('--test-ratio', type=float, default=None, help='학습 크기 대비 테스트 비율')
    experiment.add_argument('--seed', type=int, default=None, help='시드')
    experiment.add_argument('--repeats', type=int, default=None, help='반복 횟수')
    experiment.add_argument('--output', default=None, help='결과 CSV 파일 경로')

    synthesize = subparsers.add_parser('synthesize', help='합성 코퍼스 생성')
    synthesize.add_argument('spec', help='합성 코퍼스 설정 YAML 파일')
    synthesize.add_argument('--output', default=None, help='코퍼스 파일 경로 (없으면 stdout)')
    synthesize.add_argument('--annotated', default=None, help='정답 표시가 포함된 주석 데이터셋 경로')

    convert = subparsers.add_parser('convert', help='탭 구분 주석 파일 변환')
    convert.add_argument('src', help='탭 구분 파일')
    convert.add_argument('dst', help='출력 JSON 주석 데이터셋')

    return parser


def _override(section: Dict[str, Any], **values: Any) -> Dict[str, Any]:
    """None이 아닌 명령행 값으로 설정 섹션을 덮어씁니다."""
    merged = dict(section)
    merged.update({key: value for key, value in values.items() if value is not None})
    return merged


def cmd_generate(args, config: Dict[str, Any]) -> int:
    """코퍼스에서 정규식 아티팩트를 생성합니다."""
    generation_config = _override(
        config["generation"],
        knee_override=args.knee_override,
        flatness_eps=args.flatness_eps,
        lazy=args.lazy,
        bounded_star=args.bounded_star,
        workers=args.workers,
    )
    examples = load_corpus(args.corpus)
    manager = RegexGenerationManager(generation_config)
    result = manager.generate(examples)

    if args.output:
        write_artifacts(args.output, result.artifacts)
        for artifact in result.artifacts:
            print(f"{artifact.rank}\t{artifact.source_metaparam}\t{artifact.n_training_examples}\t{artifact.regex}")
    else:
        for artifact in result.artifacts:
            print(json.dumps(artifact_record(artifact), ensure_ascii=False))

    if args.diagnostics:
        write_diagnostics(args.diagnostics, result.knee, result.corpus_subsequence, float(generation_config["flatness_eps"]))
    if args.plot:
        from visualization.cdf_plot import plot_cdf

        plot_cdf(result.knee, args.plot)
    return EXIT_OK


def cmd_evaluate(args, config: Dict[str, Any]) -> int:
    """아티팩트를 주석 데이터셋에 적용하여 평가합니다."""
    evaluation_config = _override(config["evaluation"], dataset_format=args.dataset_format)
    artifacts = load_artifacts(args.artifacts)
    if evaluation_config["dataset_format"] == "tsv":
        docs = load_relie_tsv(args.dataset)
    else:
        docs = load_annotated(args.dataset)

    workers = args.workers or config["generation"].get("workers", 1)
    report = score(run_extraction(artifacts, docs, workers=max(1, int(workers))))
    print(format_report(report))
    if args.output:
        write_report(args.output, report)
    return EXIT_OK


def cmd_abstract(args, parser: UsageArgumentParser) -> int:
    """문자열 하나의 MetaParam을 출력합니다."""
    if not args.string:
        parser.error("abstract에는 비어 있지 않은 문자열이 필요합니다")
    print(transform_and_compress(args.string))
    return EXIT_OK


def cmd_experiment(args, config: Dict[str, Any]) -> int:
    """학습 크기별 실험을 실행합니다."""
    experiment_config = _override(
        config["experiment"],
        learning_sizes=args.learning_sizes,
        test_ratio=args.test_ratio,
        seed=args.seed,
        repeats=args.repeats,
    )
    docs = load_annotated(args.dataset)
    frame = run_learning_experiment(
        docs,
        learning_sizes=[int(size) for size in experiment_config["learning_sizes"]],
        test_ratio=float(experiment_config["test_ratio"]),
        seed=int(experiment_config["seed"]),
        repeats=int(experiment_config["repeats"]),
        generation_config=config["generation"],
    )
    print(frame.to_string(index=False))
    if args.output:
        directory = os.path.dirname(args.output)
        if directory and not os.path.exists(directory):
            os.makedirs(directory)
        frame.to_csv(args.output, index=False)
        logger.info(f"실험 결과 저장: {args.output}")
    return EXIT_OK


def cmd_synthesize(args) -> int:
    """합성 코퍼스를 생성합니다."""
    examples = generate_synthetic(load_synthetic_spec(args.spec))
    if args.output:
        save_corpus(args.output, examples)
    if args.annotated:
        save_annotated(args.annotated, examples)
    if not args.output and not args.annotated:
        for example in examples:
            print(example.raw)
    return EXIT_OK


def cmd_convert(args) -> int:
    """탭 구분 주석 파일을 변환합니다."""
    examples = convert_relie_tsv(args.src, args.dst)
    print(f"{len(examples)} records -> {args.dst}")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """메인 함수"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        config = load_config(args.config)
        setup_logging(config["logging"], args.log_level)
        logger.info(f"명령 실행: {args.command}")

        if args.command == 'generate':
            return cmd_generate(args, config)
        if args.command == 'evaluate':
            return cmd_evaluate(args, config)
        if args.command == 'abstract':
            return cmd_abstract(args, parser)
        if args.command == 'experiment':
            return cmd_experiment(args, config)
        if args.command == 'synthesize':
            return cmd_synthesize(args)
        if args.command == 'convert':
            return cmd_convert(args)
        parser.error(f"알 수 없는 명령: {args.command}")
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except (DataError, OSError) as e:
        logger.error(f"데이터 오류: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DATA
    except InvariantViolation as e:
        logger.error(f"내부 불변식 위반: {e}")
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as e:
        logger.exception(f"예상하지 못한 오류 발생: {e}")
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
