"""
예제 추상화 패키지

이 패키지는 예제를 MetaParam으로 변환하고 공통 부분 수열을 추출합니다:
- 문자 변환 및 압축 (Mapper)
- MetaParam별 클러스터 병합과 빈도 계산 (Reducer)
- 최장 공통 부분 수열(LCS)과 좌측 우선 정렬
"""
