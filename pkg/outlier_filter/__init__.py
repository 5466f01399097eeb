"""
이상치 필터 패키지

MetaParam 빈도의 누적 분포에서 knee 지점을 찾아 저빈도 클러스터를 걸러냅니다.
"""
