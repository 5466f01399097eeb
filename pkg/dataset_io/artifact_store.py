#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
아티팩트 저장 모듈

이 모듈은 파이프라인 결과를 사람이 읽고 수정할 수 있는 파일로 저장합니다:
- 정규식 아티팩트: 정상 클러스터마다 JSON 레코드 한 줄
- 진단 정보: 요약 레코드 한 줄 + 클러스터별 CDF 레코드
- 평가 리포트: JSON 객체 하나

같은 입력이면 바이트 단위로 같은 파일이 나오도록 키 순서를 고정합니다.
"""

import json
import logging
import re
from typing import Any, Dict, List, Sequence

from core.exceptions import ArtifactLoadError
from core.models import Anchor, EvalReport, MetaParam, RegexArtifact, SlotRef, Template
from outlier_filter.knee import KneeResult
from regex_generation.abstraction_tree import DEFAULT_TREE
from regex_generation.slot_generator import consolidate, render_quantifier
from .corpus_loader import _ensure_parent, read_text, split_lines

logger = logging.getLogger(__name__)


def _dumps(record: Dict[str, Any]) -> str:
    return json.dumps(record, ensure_ascii=False, sort_keys=False)


def artifact_record(artifact: RegexArtifact) -> Dict[str, Any]:
    """아티팩트를 JSON 레코드 딕셔너리로 변환합니다."""
    fragments = [
        consolidate(slot.atoms, DEFAULT_TREE) + render_quantifier(slot.quantifier, slot.mode)
        for slot in artifact.slots
    ]
    elements = []
    for element in artifact.template.elements:
        if isinstance(element, Anchor):
            elements.append({"anchor": element.text})
        else:
            slot_element: Dict[str, Any] = {"slot": element.index}
            if element.index < len(fragments):
                slot_element["fragment"] = fragments[element.index]
            elements.append(slot_element)
    return {
        "rank": artifact.rank,
        "metaparam": str(artifact.source_metaparam),
        "regex": artifact.regex,
        "n_training_examples": artifact.n_training_examples,
        "template": elements,
    }


def write_artifacts(path: str, artifacts: Sequence[RegexArtifact]) -> None:
    """
    정규식 아티팩트를 줄 단위 JSON으로 저장합니다.

    Args:
        path: 출력 파일 경로
        artifacts: 순위순 아티팩트 목록
    """
    try:
        _ensure_parent(path)
        with open(path, "w", encoding="utf-8", newline="") as file:
            for artifact in artifacts:
                file.write(_dumps(artifact_record(artifact)) + "\n")
        logger.info(f"아티팩트 {len(artifacts)}개 저장: {path}")
    except Exception as e:
        logger.error(f"아티팩트 저장 중 오류 발생: {e}")
        raise


def _parse_elements(line_no: int, raw_elements: Any) -> List:
    if not isinstance(raw_elements, list):
        raise ArtifactLoadError(f"{line_no}번째 줄: template은 목록이어야 합니다")
    elements = []
    for raw in raw_elements:
        if isinstance(raw, dict) and isinstance(raw.get("anchor"), str):
            elements.append(Anchor(raw["anchor"]))
        elif isinstance(raw, dict) and isinstance(raw.get("slot"), int):
            elements.append(SlotRef(raw["slot"]))
        else:
            raise ArtifactLoadError(f"{line_no}번째 줄: 알 수 없는 템플릿 요소 {raw!r}")
    return elements


def parse_artifact_record(line_no: int, line: str) -> RegexArtifact:
    """아티팩트 레코드 한 줄을 RegexArtifact로 변환합니다."""
    try:
        record = json.loads(line)
    except json.JSONDecodeError as e:
        raise ArtifactLoadError(f"{line_no}번째 줄: JSON 파싱 실패: {e}") from e
    if not isinstance(record, dict):
        raise ArtifactLoadError(f"{line_no}번째 줄: JSON 객체가 아닙니다")

    regex = record.get("regex")
    if not isinstance(regex, str) or not regex:
        raise ArtifactLoadError(f"{line_no}번째 줄: regex 필드가 없거나 문자열이 아닙니다")
    try:
        re.compile(regex)
    except re.error as e:
        raise ArtifactLoadError(f"{line_no}번째 줄: 정규식 컴파일 실패 {regex!r}: {e}") from e

    try:
        metaparam = MetaParam(str(record.get("metaparam", "")))
        template = Template(tuple(_parse_elements(line_no, record.get("template", []))))
    except ValueError as e:
        raise ArtifactLoadError(f"{line_no}번째 줄: {e}") from e

    count = record.get("n_training_examples", 0)
    rank = record.get("rank")
    if not isinstance(count, int) or (rank is not None and not isinstance(rank, int)):
        raise ArtifactLoadError(f"{line_no}번째 줄: n_training_examples/rank는 정수여야 합니다")

    return RegexArtifact(
        source_metaparam=metaparam,
        regex=regex,
        n_training_examples=count,
        template=template,
        rank=rank,
    )


def load_artifacts(path: str) -> List[RegexArtifact]:
    """
    아티팩트 파일을 읽습니다. 사용자가 손으로 고친 정규식도 허용합니다.

    Args:
        path: 줄 단위 JSON 아티팩트 파일

    Returns:
        파일 순서의 아티팩트 목록
    """
    artifacts = []
    for line_no, line in enumerate(split_lines(read_text(path)), start=1):
        if not line.strip():
            continue
        artifacts.append(parse_artifact_record(line_no, line))
    logger.info(f"아티팩트 {len(artifacts)}개 로드: {path}")
    return artifacts


def diagnostics_records(knee: KneeResult, corpus_subsequence: str, flatness_eps: float) -> List[Dict[str, Any]]:
    """
    진단 레코드 목록을 만듭니다.

    첫 레코드는 요약이고, 이후 레코드는 순위순 클러스터별 CDF 점입니다.
    이 레코드만으로 CDF와 knee 그림을 다시 그릴 수 있습니다.
    """
    frame = knee.to_frame()
    summary = {
        "type": "summary",
        "total": int(sum(knee.frequencies)),
        "clusters": len(knee.cdf),
        "knee_rank": knee.knee_rank,
        "overridden": knee.overridden,
        "flatness_eps": flatness_eps,
        "max_distance": round(float(max(knee.distances)), 12) if knee.distances else 0.0,
        "chord": "origin" if knee.from_origin else "first",
        "corpus_common_subsequence": corpus_subsequence,
    }
    records = [summary]
    for row in frame.itertuples(index=False):
        records.append(
            {
                "type": "cluster",
                "metaparam": row.metaparam,
                "frequency": int(row.frequency),
                "rank": int(row.rank),
                "cumulative_fraction": round(float(row.cumulative_fraction), 12),
                "distance": round(float(row.distance), 12),
                "retained": bool(row.retained),
            }
        )
    return records


def write_diagnostics(path: str, knee: KneeResult, corpus_subsequence: str, flatness_eps: float) -> None:
    """진단 정보를 줄 단위 JSON으로 저장합니다."""
    try:
        _ensure_parent(path)
        with open(path, "w", encoding="utf-8", newline="") as file:
            for record in diagnostics_records(knee, corpus_subsequence, flatness_eps):
                file.write(_dumps(record) + "\n")
        logger.info(f"진단 정보 저장: {path}")
    except Exception as e:
        logger.error(f"진단 정보 저장 중 오류 발생: {e}")
        raise


def load_diagnostics(path: str) -> List[Dict[str, Any]]:
    """진단 파일을 읽어 레코드 목록으로 반환합니다."""
    records = []
    for line_no, line in enumerate(split_lines(read_text(path)), start=1):
        try:
            records.append(json.loads(line))
        except json.JSONDecodeError as e:
            raise ArtifactLoadError(f"{line_no}번째 줄: 진단 레코드 파싱 실패: {e}") from e
    return records


def write_report(path: str, report: EvalReport) -> None:
    """평가 리포트를 JSON 파일로 저장합니다."""
    try:
        _ensure_parent(path)
        with open(path, "w", encoding="utf-8", newline="") as file:
            json.dump(report.to_dict(), file, ensure_ascii=False, indent=2)
            file.write("\n")
        logger.info(f"평가 리포트 저장: {path}")
    except Exception as e:
        logger.error(f"평가 리포트 저장 중 오류 발생: {e}")
        raise


def format_report(report: EvalReport) -> str:
    """평가 리포트를 사람이 읽는 여러 줄 텍스트로 변환합니다."""
    lines = [
        f"extractions: {report.extractions}",
        f"correct: {report.correct}",
        f"positives: {report.positives}",
        f"precision: {report.precision:.4f}",
        f"recall: {report.recall:.4f}",
        f"f_measure: {report.f_measure:.4f}",
    ]
    if report.noisy_precision is not None:
        lines.append(f"outlier_extractions: {report.outlier_extractions}")
        lines.append(f"normal_examples: {report.normal_examples}")
        lines.append(f"noisy_precision: {report.noisy_precision:.4f}")
    return "\n".join(lines)
