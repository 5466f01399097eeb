#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
정규식 생성 관리 모듈

이 모듈은 코퍼스에서 정규식 아티팩트까지의 전체 파이프라인을 조정합니다:
- MetaParam 클러스터링
- knee 기반 이상치 필터링
- 정상 클러스터별 템플릿/슬롯 생성과 정규식 조립
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

from abstraction.metaparam import build_cluster_table, corpus_common_subsequence
from core.exceptions import EmptyTable
from core.models import GREEDY, LAZY, AbstractionTree, ClusterEntry, ClusterTable, Example, MetaParam, RegexArtifact
from outlier_filter.knee import DEFAULT_FLATNESS_EPS, KneeResult, filter_outliers
from .abstraction_tree import DEFAULT_TREE
from .slot_generator import assemble_regex, run_slot_pipeline
from .template_generator import build_template

logger = logging.getLogger(__name__)

DEFAULT_GENERATION_CONFIG: Dict[str, Any] = {
    "flatness_eps": DEFAULT_FLATNESS_EPS,
    "knee_override": None,
    "lazy": False,
    "bounded_star": False,
    "workers": 1,
}


@dataclass(frozen=True)
class GenerationResult:
    """파이프라인 실행 결과"""

    table: ClusterTable
    knee: KneeResult
    artifacts: List[RegexArtifact]
    corpus_subsequence: str
    settings: Dict[str, Any]


class RegexGenerationManager:
    """코퍼스로부터 클러스터별 정규식을 생성하는 클래스"""

    def __init__(self, config: Optional[Dict[str, Any]] = None, tree: AbstractionTree = DEFAULT_TREE):
        """
        정규식 생성 관리자 초기화

        Args:
            config: generation 설정 (flatness_eps, knee_override, lazy, bounded_star, workers)
            tree: 슬롯 추상화에 사용할 추상화 트리
        """
        self.config = {**DEFAULT_GENERATION_CONFIG, **(config or {})}
        self.tree = tree
        self.mode = LAZY if self.config["lazy"] else GREEDY
        self.workers = max(1, int(self.config["workers"] or 1))

    def generate_artifact(self, metaparam: MetaParam, entry: ClusterEntry, rank: Optional[int] = None) -> RegexArtifact:
        """
        클러스터 하나에 대한 정규식 아티팩트를 생성합니다.

        Args:
            metaparam: 클러스터 키
            entry: 클러스터 멤버와 빈도
            rank: 빈도 순위

        Returns:
            RegexArtifact
        """
        template = build_template(entry.members)
        states = [
            run_slot_pipeline(
                template.slot_fillings(index),
                tree=self.tree,
                mode=self.mode,
                bounded_star=self.config["bounded_star"],
            )
            for index in range(template.slot_count)
        ]
        artifact = assemble_regex(
            template,
            [state.final_fragment for state in states],
            metaparam=metaparam,
            slots=[state.to_slot() for state in states],
            rank=rank,
        )
        logger.debug(f"{metaparam} ({entry.frequency}개) -> {artifact.regex}")
        return artifact

    def generate(self, examples: Sequence[Example]) -> GenerationResult:
        """
        코퍼스 전체에 파이프라인을 실행합니다.

        Args:
            examples: 코퍼스 예제 목록

        Returns:
            GenerationResult
        """
        if not examples:
            raise EmptyTable("empty corpus")

        try:
            table = build_cluster_table(examples, workers=self.workers)
            knee = filter_outliers(
                table,
                override=self.config["knee_override"],
                flatness_eps=float(self.config["flatness_eps"]),
            )

            jobs = [(metaparam, table[metaparam], rank) for rank, metaparam in enumerate(knee.retained, start=1)]
            if self.workers > 1 and len(jobs) > 1:
                with ThreadPoolExecutor(max_workers=self.workers) as executor:
                    artifacts = list(executor.map(lambda job: self.generate_artifact(*job), jobs))
            else:
                artifacts = [self.generate_artifact(*job) for job in jobs]

            corpus_subsequence = corpus_common_subsequence(table)
        except Exception as e:
            logger.error(f"정규식 생성 중 오류 발생: {e}")
            raise

        logger.info(f"정규식 {len(artifacts)}개 생성 완료 (이상치 클러스터 {len(knee.filtered)}개 제외)")
        return GenerationResult(
            table=table,
            knee=knee,
            artifacts=artifacts,
            corpus_subsequence=corpus_subsequence,
            settings=dict(self.config),
        )
