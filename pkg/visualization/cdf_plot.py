#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
누적 분포 그림 모듈

이 모듈은 knee 판정 결과를 이미지 파일로 저장합니다:
- 순위별 클러스터 누적 비율 곡선
- 첫 점과 끝 점을 잇는 현
- knee 순위 세로선과 정상/이상치 구간 표시
"""

import logging
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from outlier_filter.knee import KneeResult  # noqa: E402

logger = logging.getLogger(__name__)


def plot_cdf(knee: KneeResult, path: str, title: str = "MetaParam CDF") -> str:
    """
    누적 분포와 knee 지점을 그려 파일로 저장합니다.

    Args:
        knee: filter_outliers 결과
        path: 출력 이미지 경로 (확장자로 형식 결정)
        title: 그림 제목

    Returns:
        저장된 파일 경로
    """
    frame = knee.to_frame()
    directory = os.path.dirname(path)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)

    fig, ax = plt.subplots(figsize=(8, 5))
    try:
        ax.plot(frame["rank"], frame["cumulative_fraction"], "b-o", markersize=3, label="CDF")
        if knee.from_origin:
            chord_x, chord_y = [0, frame["rank"].iloc[-1]], [0.0, 1.0]
        else:
            chord_x = [frame["rank"].iloc[0], frame["rank"].iloc[-1]]
            chord_y = [frame["cumulative_fraction"].iloc[0], frame["cumulative_fraction"].iloc[-1]]
        ax.plot(
            chord_x,
            chord_y,
            "k--",
            linewidth=1,
            label="chord",
        )
        knee_label = f"knee = {knee.knee_rank}" + (" (override)" if knee.overridden else "")
        ax.axvline(knee.knee_rank, color="r", linestyle="--", label=knee_label)
        filtered = frame[~frame["retained"]]
        if not filtered.empty:
            ax.scatter(filtered["rank"], filtered["cumulative_fraction"], color="gray", zorder=3, label="filtered")
        ax.set_title(title)
        ax.set_xlabel("rank")
        ax.set_ylabel("cumulative fraction")
        ax.set_ylim(0, 1.05)
        ax.legend(loc="lower right")
        fig.savefig(path, dpi=100)
        logger.info(f"누적 분포 그림 저장: {path}")
    except Exception as e:
        logger.error(f"누적 분포 그림 저장 중 오류 발생: {e}")
        raise
    finally:
        plt.close(fig)
    return path
