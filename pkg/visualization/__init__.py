#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
시각화 모듈

이 모듈은 클러스터 빈도 누적 분포와 knee 판정 결과를 그림으로 저장하는 기능을 제공합니다.
"""
