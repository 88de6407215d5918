"""Curriculum graphs: topics, prerequisite edges, mastery levels, goals.

Input files use a ``[curriculum]`` section with keys ``topics`` (space
separated ids), ``prereq`` (``before>after`` pairs), ``levels`` (L >= 2)
and ``goal`` (``topic:level`` targets).
"""

import configparser
from dataclasses import dataclass, field
from pathlib import Path

from sankofa import SankofaError


class CyclicPrerequisites(SankofaError):
    pass


class EmptyCurriculum(SankofaError):
    pass


@dataclass(frozen=True)
class CurriculumGraph:
    topics: tuple[str, ...]
    prerequisites: tuple[tuple[str, str], ...]  # (before, after)
    mastery_levels: int
    goals: tuple[tuple[str, int], ...]  # (topic, level)

    def __post_init__(self):
        if not self.topics:
            raise EmptyCurriculum("curriculum has no topics")
        if not self.goals:
            raise EmptyCurriculum("curriculum has no goal")
        if self.mastery_levels < 2:
            raise ValueError("mastery_levels must be >= 2")
        known = set(self.topics)
        for before, after in self.prerequisites:
            if before not in known or after not in known:
                raise ValueError(f"prerequisite ({before}, {after}) names unknown topic")
        for topic, level in self.goals:
            if topic not in known:
                raise ValueError(f"goal topic {topic!r} unknown")
            if not 0 <= level < self.mastery_levels:
                raise ValueError(f"goal level {level} outside 0..{self.mastery_levels - 1}")
        self.check_acyclic()

    def direct_prerequisites(self, topic: str) -> list[str]:
        return sorted(before for before, after in self.prerequisites if after == topic)

    def check_acyclic(self) -> None:
        # Kahn's algorithm over the whole prerequisite graph
        indegree = {t: 0 for t in self.topics}
        for _, after in self.prerequisites:
            indegree[after] += 1
        ready = [t for t in self.topics if indegree[t] == 0]
        seen = 0
        while ready:
            topic = ready.pop()
            seen += 1
            for before, after in self.prerequisites:
                if before == topic:
                    indegree[after] -= 1
                    if indegree[after] == 0:
                        ready.append(after)
        if seen != len(self.topics):
            cyclic = sorted(t for t in self.topics if indegree[t] > 0)
            raise CyclicPrerequisites(f"prerequisite cycle involving {cyclic}")

    def relevant_topics(self) -> list[str]:
        """Goal topics plus all their prerequisite ancestors, topologically
        ordered (ties broken by topic id)."""
        needed: set[str] = set()
        stack = [topic for topic, _ in self.goals]
        while stack:
            topic = stack.pop()
            if topic in needed:
                continue
            needed.add(topic)
            stack.extend(self.direct_prerequisites(topic))
        order = []
        remaining = set(needed)
        while remaining:
            ready = sorted(
                t
                for t in remaining
                if all(p not in remaining for p in self.direct_prerequisites(t))
            )
            order.extend(ready)
            remaining -= set(ready)
        return order


def load_curriculum_file(path: str | Path) -> CurriculumGraph:
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read or "curriculum" not in parser:
        raise ValueError(f"{path}: missing [curriculum] section")
    section = parser["curriculum"]
    topics = tuple(section.get("topics", "").split())
    prereq = []
    for pair in section.get("prereq", "").split():
        before, sep, after = pair.partition(">")
        if not sep:
            raise ValueError(f"{path}: prereq entry {pair!r} is not 'before>after'")
        prereq.append((before, after))
    goals = []
    for entry in section.get("goal", "").split():
        topic, sep, level = entry.partition(":")
        if not sep:
            raise ValueError(f"{path}: goal entry {entry!r} is not 'topic:level'")
        goals.append((topic, int(level)))
    return CurriculumGraph(
        topics=topics,
        prerequisites=tuple(prereq),
        mastery_levels=section.getint("levels", 3),
        goals=tuple(goals),
    )


def default_curriculum(subject: str, levels: int = 3) -> CurriculumGraph:
    """Three-topic chain synthesized from a lesson subject."""
    slug = "-".join(subject.lower().split()) or "topic"
    topics = (f"{slug}-basics", slug, f"{slug}-mastery")
    return CurriculumGraph(
        topics=topics,
        prerequisites=((topics[0], topics[1]), (topics[1], topics[2])),
        mastery_levels=levels,
        goals=((topics[2], levels - 1),),
    )
