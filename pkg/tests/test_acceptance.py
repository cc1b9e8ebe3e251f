"""Acceptance suite: one test per contract criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL
line per criterion.
"""

import functools
import math
import time

import numpy as np

from binsort.classifier import GroundTruthOracle, evaluate, train_baseline
from binsort.device import DeviceState, MachineState, ReleaseDrop, RotateSorter, step
from binsort.imaging import (
    AffineMatrix,
    LabeledImage,
    augment_one,
    compose,
    make_rotation,
    make_shear,
    make_translation,
    split_dataset,
    warp_affine,
)
from binsort.rng import SplitMix64
from binsort.simulator import (
    Scenario,
    ScenarioItem,
    generate_synthetic_corpus,
    run_scenario,
    scenario_from_corpus,
)
from binsort.taxonomy import BinKind, TrashCategory, bin_for
from binsort.telemetry import (
    BinRecord,
    EventLog,
    FleetService,
    FullAlert,
    StatusUpdate,
)

from conftest import random_image
from oracles import rotN_permutation, warp_brute_force
from test_device import EVENT_POOL, TARGETS, expected_transition
from test_registry import apply_ops, fixed_clock, fold_oracle


def criterion(name):
    def wrap(fn):
        @functools.wraps(fn)
        def runner(*args, **kwargs):
            try:
                result = fn(*args, **kwargs)
            except BaseException:
                print(f"[ACCEPTANCE] {name}: FAIL")
                raise
            print(f"[ACCEPTANCE] {name}: PASS")
            return result

        return runner

    return wrap


@criterion("affine oracle suite (identity, quarter turns, general warps)")
def test_affine_oracle_suite():
    started = time.perf_counter()
    rng = SplitMix64(0xA11CE)
    n_images = 100
    for i in range(n_images):
        side = 2 + rng.below(11)  # 2..12
        img = random_image(rng, side, side, 1)
        center = (side - 1) / 2.0

        assert warp_affine(img, AffineMatrix(1, 0, 0, 0, 1, 0)) == img
        for angle, turns in ((90, 1), (180, 2), (270, 3)):
            got = warp_affine(img, make_rotation(angle, center, center))
            assert got == rotN_permutation(img, turns), f"{angle} deg, side {side}"

        general = compose(
            make_rotation(rng.uniform(-80, 80), center, center),
            compose(
                make_shear(rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4), center, center),
                make_translation(rng.uniform(-3, 3), rng.uniform(-3, 3)),
            ),
        )
        if abs(general.determinant) < 0.05:
            general = make_translation(rng.uniform(-2.5, 2.5), rng.uniform(-2.5, 2.5))
        fill = rng.below(256)
        assert warp_affine(img, general, fill=fill) == warp_brute_force(img, general, fill=fill)
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"affine suite took {elapsed:.1f}s"


@criterion("augmentation yields 4 labeled variants, seed-deterministic")
def test_augmentation_contract():
    corpus = generate_synthetic_corpus(seed=77, per_class=25)  # 200 images
    assert len(corpus) == 200
    root_a, root_b = SplitMix64(9), SplitMix64(9)
    for item in corpus:
        out_a = augment_one(item, root_a.split())
        out_b = augment_one(item, root_b.split())
        assert len(out_a) == 4
        assert all(v.label is item.label for v in out_a)
        assert all(
            (v.image.width, v.image.height, v.image.channels)
            == (item.image.width, item.image.height, item.image.channels)
            for v in out_a
        )
        assert [v.image for v in out_a] == [v.image for v in out_b]
        assert [v.source_id for v in out_a] == [f"{item.source_id}-aug{k}" for k in range(4)]


@criterion("80/20 split: per-class rounding, disjoint, exhaustive, deterministic")
def test_split_contract():
    sweep = SplitMix64(0x5BED)
    for trial in range(25):
        corpus_seed = sweep.next_u64()
        split_seed = sweep.next_u64()
        counts = [1 + sweep.below(9) for _ in TrashCategory]
        items = []
        gen = SplitMix64(corpus_seed)
        for cat, n in zip(TrashCategory, counts):
            for i in range(n):
                items.append(
                    LabeledImage(
                        image=random_image(gen, 4, 4, 1),
                        label=cat,
                        source_id=f"t{trial}-{cat.slug}-{i}",
                    )
                )
        first = split_dataset(items, 0.8, split_seed)
        second = split_dataset(items, 0.8, split_seed)
        assert [it.source_id for it in first.train] == [it.source_id for it in second.train]

        train_ids = {it.source_id for it in first.train}
        val_ids = {it.source_id for it in first.validation}
        assert train_ids.isdisjoint(val_ids)
        assert train_ids | val_ids == {it.source_id for it in items}
        for cat, n in zip(TrashCategory, counts):
            expected_train = math.floor(n * 0.8 + 0.5)
            if n >= 2:
                expected_train = min(expected_train, n - 1)
            assert sum(1 for it in first.train if it.label is cat) == expected_train


@criterion("taxonomy: 4 recyclable and 4 non-recyclable categories")
def test_taxonomy_mapping():
    recyclable = {
        TrashCategory.PLASTIC_BOTTLE,
        TrashCategory.CAN,
        TrashCategory.PAPER,
        TrashCategory.PEN,
    }
    for cat in TrashCategory:
        expected = BinKind.RECYCLABLE if cat in recyclable else BinKind.NON_RECYCLABLE
        assert bin_for(cat) is expected
    assert sum(bin_for(c) is BinKind.RECYCLABLE for c in TrashCategory) == 4


@criterion("state machine: exhaustive table, safe drops, neutral recentering")
def test_state_machine_contract():
    for phase in DeviceState:
        for target in TARGETS:
            state = MachineState(phase, target)
            for event in EVENT_POOL:
                assert step(state, event) == expected_transition(state, event)

    rng = np.random.Generator(np.random.PCG64(31337))
    for _ in range(1000):
        state = MachineState()
        servo_positioned = False
        for idx in rng.integers(0, len(EVENT_POOL), size=14):
            event = EVENT_POOL[int(idx)]
            prev = state.phase
            state, action = step(state, event)
            if prev is DeviceState.IDLE and state.phase is DeviceState.CAPTURING:
                servo_positioned = False
            if prev is DeviceState.ROUTING and state.phase is DeviceState.DROPPING:
                servo_positioned = True
            if isinstance(action, ReleaseDrop):
                assert servo_positioned
            if state.phase is DeviceState.IDLE and prev is not DeviceState.IDLE:
                assert action == RotateSorter(90)


@criterion("end-to-end: oracle routes 100%, baseline >= 0.90, trace == evaluate")
def test_end_to_end_simulation():
    started = time.perf_counter()
    corpus = generate_synthetic_corpus(seed=2026, per_class=25)  # 200 images
    caps = {BinKind.RECYCLABLE: 10_000, BinKind.NON_RECYCLABLE: 10_000}

    oracle = GroundTruthOracle.from_items(corpus)
    scenario = scenario_from_corpus(corpus, seed=12, capacities=caps, count=500)
    trace = run_scenario(scenario, oracle, corpus)
    assert len(trace.cycles) == 500
    assert trace.bin_accuracy == 1.0

    split = split_dataset(corpus, 0.8, seed=99)
    model = train_baseline(split.train)
    report = evaluate(model, split.validation)
    assert report.accuracy >= 0.90

    val_scenario = Scenario(
        seed=0,
        items=tuple(
            ScenarioItem(5.0 * (i + 1), it.source_id, it.label)
            for i, it in enumerate(split.validation)
        ),
        capacities=caps,
    )
    val_trace = run_scenario(val_scenario, model, corpus)
    assert val_trace.classification_accuracy == report.accuracy

    elapsed = time.perf_counter() - started
    assert elapsed < 30.0, f"end-to-end run took {elapsed:.1f}s"


@criterion("fill alerts fire once per crossing; registry == log fold; restart exact")
def test_fill_and_notification_contract(tmp_path):
    corpus = generate_synthetic_corpus(seed=15, per_class=8)
    oracle = GroundTruthOracle.from_items(corpus)
    bottles = [it for it in corpus if it.label is TrashCategory.PLASTIC_BOTTLE]
    bags = [it for it in corpus if it.label is TrashCategory.PLASTIC_BAG]
    mixed = [x for pair in zip(bottles, bags) for x in pair]  # alternate bins
    scenario = Scenario(
        seed=0,
        items=tuple(
            ScenarioItem(10.0 * (i + 1), it.source_id, it.label) for i, it in enumerate(mixed)
        ),
        capacities={BinKind.RECYCLABLE: 3, BinKind.NON_RECYCLABLE: 5},
    )
    trace = run_scenario(scenario, oracle, corpus)
    assert trace.full_alert_count(BinKind.RECYCLABLE) == 1  # crossed at item 3
    assert trace.full_alert_count(BinKind.NON_RECYCLABLE) == 1  # crossed at item 5
    assert trace.final_fill[BinKind.RECYCLABLE].item_count == 8

    log_path = tmp_path / "events.log"
    svc = FleetService(EventLog(log_path), clock=fixed_clock)
    apply_ops(
        svc,
        [
            ("register", "b1"),
            ("register", "b2"),
            ("status", "b1", 40, 0, False),
            ("full", "b1", BinKind.RECYCLABLE, False),
            ("status", "b2", 10, 20, False),
            ("remove", "b2"),
            ("status", "b1", 5, 5, False),
            ("heartbeat", "b1", False),
        ],
    )
    assert svc.registry.snapshot() == fold_oracle(svc.frames_after(0))

    restarted = FleetService(EventLog(log_path), clock=fixed_clock)
    assert restarted.registry.snapshot_bytes() == svc.registry.snapshot_bytes()


@criterion("protocol: duplicate seqs suppressed; since=0 replays the whole log")
def test_protocol_conformance():
    svc = FleetService(clock=fixed_clock)
    svc.register(BinRecord(id="b1", date=fixed_clock()))
    queue, _ = svc.attach_subscriber()

    lv = {BinKind.RECYCLABLE: 60, BinKind.NON_RECYCLABLE: 0}
    applied, _ = svc.update(StatusUpdate(bin_id="b1", seq=1, levels=lv))
    assert applied
    before = svc.registry.snapshot_bytes()
    dup_applied, frame = svc.update(StatusUpdate(bin_id="b1", seq=1, levels=lv))
    assert not dup_applied and frame is None
    assert svc.registry.snapshot_bytes() == before

    dup_alert = FullAlert(bin_id="b1", seq=2, bin=BinKind.RECYCLABLE)
    svc.update(dup_alert)
    svc.update(dup_alert)  # replayed message, same sequence number
    notifications = []
    while not queue.empty():
        notifications.append(queue.get_nowait())
    assert [f.type for f in notifications] == ["status", "full"]  # no duplicates

    _, backlog = svc.attach_subscriber(since=0)
    offsets = [f.offset for f in backlog]
    assert offsets == list(range(1, svc.head_offset + 1))
    assert [f.to_dict() for f in backlog] == [f.to_dict() for f in svc.frames_after(0)]
