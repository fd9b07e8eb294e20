"""Bundled Disaster Management Exercise (DME) scenario and corpus content.

A US Army lieutenant stands in for their commanding officer at the first
meeting with Captain Wang, the liaison of the Chinese contingent in a
joint disaster relief coalition. Fourteen evaluation sections score the
trainee's utterances against abstracted cultural features.

Scenes 1 to 3 transcribe a reference session; scene 4 is authored
extension content. Each section carries phrase banks from which the
corpus synthesizer generates labeled paraphrases, plus the fixed seed
rows that are always included in a synthesized corpus.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .corpus import AnnotatedExample, PhraseTemplate, SectionTemplates
from .scenario import (
    AvatarLine,
    EndNode,
    EvaluationPoint,
    Feature,
    FeatureSet,
    GuideNote,
    Scenario,
    Scene,
)

HEIST = "Captain Heist"
WANG = "Captain Wang"


@dataclass(frozen=True)
class _Bank:
    """One feature's phrase alternatives: ``on`` realizations carry the
    bit 1, ``off`` realizations carry 0."""

    code: str
    description: str
    on: tuple[str, ...]
    off: tuple[str, ...]


@dataclass(frozen=True)
class _Section:
    section_id: str
    banks: tuple[_Bank, ...]
    # layout items: int = feature index, tuple = filler phrase alternatives
    layout: tuple
    repeat_prompt: str
    seeds: tuple[tuple[str, tuple[int, ...], str], ...]  # (text, labels, source)


_SECTIONS: tuple[_Section, ...] = (
    _Section(
        section_id="s01",
        banks=(
            _Bank(
                "A",
                "greeting the officer",
                on=("Good morning", "Hello", "Hi", "Greetings"),
                off=("",),
            ),
            _Bank(
                "B",
                "avoiding asking about the officer's welfare on a first meeting",
                on=("", "it is a pleasure to meet you."),
                off=(
                    "how are you doing?",
                    "how are you?",
                    "how are you doing today?",
                    "how have you been?",
                ),
            ),
            _Bank(
                "C",
                "using an honorific expression",
                on=(
                    "It's an honor to meet you today.",
                    "It is an honor to be here.",
                    "I am honored to meet you.",
                ),
                off=("",),
            ),
        ),
        layout=(0, ("captain Wang,", "Captain Wang,", "captain,"), 1, 2),
        repeat_prompt=(
            "I beg your pardon, Lieutenant, I did not catch that. Could you say it again?"
        ),
        seeds=(
            ("Good morning captain Wang, how are you doing?", (1, 0, 0), "authored"),
            (
                "Good morning captain Wang, how are you doing today? "
                "It's an honor to be here.",
                (1, 0, 1),
                "authored",
            ),
            ("Hello captain Wang, it's an honor to meet you today.", (1, 1, 1), "authored"),
            ("Good morning Captain Wang.", (1, 1, 0), "scripted-replay"),
        ),
    ),
    _Section(
        section_id="s02",
        banks=(
            _Bank(
                "A",
                "addressing the officer by his rank",
                on=("Captain,", "Captain Wang,", "Sir,", "Captain, sir,"),
                off=("",),
            ),
            _Bank(
                "B",
                "asking about the officer's role in the coalition",
                on=(
                    "are you the leader of the Chinese component of the coalition?",
                    "are you leading the Chinese contingent of the coalition?",
                    "do you lead the Chinese side of the coalition?",
                    "do you head the Chinese delegation of the coalition?",
                ),
                off=(
                    "I was told we would plan the mission together.",
                    "we should begin the planning soon.",
                ),
            ),
            _Bank(
                "C",
                "avoiding casual slang when speaking",
                on=("",),
                off=("hey man,", "yo,", "dude,", "listen up, buddy,"),
            ),
        ),
        layout=(2, 0, 1),
        repeat_prompt="I am sorry, I could not hear you clearly. Could you repeat that?",
        seeds=(
            (
                "Are you the leader of the Chinese component of the coalition.",
                (0, 1, 1),
                "scripted-replay",
            ),
        ),
    ),
    _Section(
        section_id="s03",
        banks=(
            _Bank(
                "A",
                "explaining your commanding officer's absence",
                on=(
                    "unfortunately Captain Heist had prior duties,",
                    "Captain Heist was called away unexpectedly,",
                    "regrettably Captain Heist could not attend,",
                ),
                off=("",),
            ),
            _Bank(
                "B",
                "offering to act in your commander's place",
                on=(
                    "I will be taking his place.",
                    "I will be standing in for him.",
                    "I am here in his stead.",
                ),
                off=("he may join us later.", "I am not certain when he will arrive."),
            ),
        ),
        layout=(0, 1),
        repeat_prompt="Pardon me, Lieutenant, could you say that once more?",
        seeds=(
            (
                "Unfortunately Captain Heist had prior duties and I will be taking his place.",
                (1, 1),
                "scripted-replay",
            ),
        ),
    ),
    _Section(
        section_id="s04",
        banks=(
            _Bank(
                "A",
                "giving a concrete reason for the absence",
                on=(
                    "he had a prior engagement with other officers.",
                    "he was required at a staff meeting.",
                    "urgent duties kept him at headquarters.",
                ),
                off=("he could not make it.",),
            ),
            _Bank(
                "B",
                "expressing regret for the change of plans",
                on=(
                    "I apologize for the inconvenience.",
                    "I am sorry for the late notice.",
                    "we regret the change.",
                ),
                off=("",),
            ),
            _Bank(
                "C",
                "reassuring the officer of your full support",
                on=(
                    "you will have my full support.",
                    "you will have my complete assistance.",
                    "I am here to help with whatever you require.",
                ),
                off=("",),
            ),
        ),
        layout=(0, 1, 2),
        repeat_prompt="Could you repeat that for me, Lieutenant?",
        seeds=(
            (
                "He unfortunately had a prior engagements with other officers.",
                (1, 0, 0),
                "scripted-replay",
            ),
        ),
    ),
    _Section(
        section_id="s05",
        banks=(
            _Bank(
                "A",
                "showing readiness to begin the work",
                on=(
                    "let's get started.",
                    "let us begin preparing.",
                    "I am ready to begin.",
                    "we should get started right away.",
                    "I am eager to get to work.",
                ),
                off=("I suppose we have plenty of time.", "there is no rush."),
            ),
            _Bank(
                "B",
                "using a respectful term of address",
                on=("sir.", "Captain.", "Captain Wang, sir."),
                off=("",),
            ),
        ),
        layout=(("Great,", "Excellent,", "Very good,", ""), 0, 1),
        repeat_prompt="One more time, please, Lieutenant.",
        seeds=(("Great let's get started sir.", (1, 1), "scripted-replay"),),
    ),
    _Section(
        section_id="s06",
        banks=(
            _Bank(
                "A",
                "addressing the officer by name or rank",
                on=("Captain Wang,", "Captain,", "Sir,"),
                off=("",),
            ),
            _Bank(
                "B",
                "offering your assistance",
                on=(
                    "is there anything I can help you with?",
                    "is there anything I can do for you?",
                    "how can I assist you?",
                    "what can I help you with?",
                ),
                off=("what brings you here?", "I was just heading out."),
            ),
            _Bank(
                "C",
                "making time to attend to the officer",
                on=(
                    "I am at your disposal.",
                    "my schedule is clear for you.",
                    "I have time for you right now.",
                ),
                off=("", "I only have a moment.", "I am quite busy today."),
            ),
        ),
        layout=(0, 1, 2),
        repeat_prompt="My apologies, Lieutenant, could you say that again?",
        seeds=(
            (
                "Captain Wang is there anything I can help you with?",
                (1, 1, 0),
                "scripted-replay",
            ),
        ),
    ),
    _Section(
        section_id="s07",
        banks=(
            _Bank(
                "A",
                "inviting the officer to voice his concerns",
                on=(
                    "what are your concerns?",
                    "please share your concerns.",
                    "tell me what questions you have.",
                ),
                off=("I am sure everything is in order.", "there is nothing to worry about."),
            ),
            _Bank(
                "B",
                "addressing the officer respectfully",
                on=("officer.", "Captain.", "sir."),
                off=("",),
            ),
            _Bank(
                "C",
                "avoiding dismissive language",
                on=("",),
                off=("make it quick,", "I do not have all day,", "hurry up,"),
            ),
        ),
        layout=(("Well,", "Of course,", ""), 2, 0, 1),
        repeat_prompt="Could you repeat that, Lieutenant?",
        seeds=(("Well what are your concerns officer.", (1, 1, 1), "scripted-replay"),),
    ),
    _Section(
        section_id="s08",
        banks=(
            _Bank(
                "A",
                "acknowledging the question about supplies",
                on=(
                    "about the supplies,",
                    "regarding the supplies you asked about,",
                    "as for our supplies and equipment,",
                ),
                off=("",),
            ),
            _Bank(
                "B",
                "being honest that the planning is not finished",
                on=(
                    "we have not worked out all the details yet.",
                    "we haven't worked out all the kinks.",
                    "our planning is not final yet.",
                ),
                off=("everything is fully settled.", "the plan is complete and approved."),
            ),
            _Bank(
                "C",
                "inviting the officer to the afternoon briefing",
                on=(
                    "you are more than welcome to come to our briefing later this afternoon.",
                    "please join our briefing this afternoon.",
                    "you could attend our briefing later today.",
                ),
                off=("",),
            ),
            _Bank(
                "D",
                "thanking the officer for his patience",
                on=(
                    "thank you for your patience.",
                    "I appreciate your patience.",
                    "thank you for understanding.",
                ),
                off=("",),
            ),
        ),
        layout=(("Well Captain,", "Captain,", ""), 0, 1, 2, 3),
        repeat_prompt="I did not quite catch that, Lieutenant. Once more, please?",
        seeds=(
            (
                "Well Captain we haven't worked out all the Kinks but if you would like to "
                "meet are at our briefing later this afternoon you're more than welcome to come.",
                (0, 1, 1, 0),
                "scripted-replay",
            ),
        ),
    ),
    _Section(
        section_id="s09",
        banks=(
            _Bank(
                "A",
                "sharing at least basic information",
                on=(
                    "I can give you a general outline now.",
                    "here is a basic overview of what we intend.",
                    "broadly speaking, we will cover transport and logistics.",
                ),
                off=("I cannot say anything more.",),
            ),
            _Bank(
                "B",
                "explaining why the details are limited",
                on=(
                    "the full plan has not been confirmed.",
                    "numbers are still being worked out.",
                    "final details remain under review.",
                ),
                off=("",),
            ),
            _Bank(
                "C",
                "staying patient when pressed",
                on=("I understand your position.", "I appreciate why you ask."),
                off=("", "as I already told you,", "I will not repeat myself,"),
            ),
        ),
        layout=(("Captain,", "Well, Captain,", "For now,"), 2, 0, 1),
        repeat_prompt="Say that once more for me, Lieutenant.",
        seeds=(
            (
                "Well Captain we haven't worked out all the Kinks but if you would like to "
                "meet are at our briefing later this afternoon you're more than welcome to come.",
                (0, 1, 0),
                "scripted-replay",
            ),
        ),
    ),
    _Section(
        section_id="s10",
        banks=(
            _Bank(
                "A",
                "describing the supplies planned for the mission",
                on=(
                    "we plan on bringing food, water, and medical equipment such as medicine.",
                    "we will bring food, water, and hospital equipment.",
                    "our cargo includes food, water, and medical supplies.",
                ),
                off=("the cargo list is not public.",),
            ),
            _Bank(
                "B",
                "deferring undecided points to the briefing",
                on=(
                    "the rest will be discussed in the brief.",
                    "open questions will be covered at the briefing.",
                    "anything undecided will be settled in the brief.",
                ),
                off=("",),
            ),
        ),
        layout=(("Captain,", "Well,", "At this stage,"), 0, 1),
        repeat_prompt="Could you go over that again, Lieutenant?",
        seeds=(
            (
                "Well caps and we plan on bringing food water and other Hospital related "
                "equipment such as medicine to the site but we aren't sure what sort of "
                "Weaponry will be using but that will be discussed in the brief.",
                (1, 1),
                "scripted-replay",
            ),
        ),
    ),
    _Section(
        section_id="s11",
        banks=(
            _Bank(
                "A",
                "giving clear directions to the supply depot",
                on=(
                    "the supply depot is down the way to the left.",
                    "the depot is just down the road on the left.",
                    "head down this way and the depot is on your left.",
                ),
                off=("I am not certain where it is.", "you would have to ask someone else."),
            ),
        ),
        layout=(("Captain,", "Well Captain,", "Of course,"), 0),
        repeat_prompt="One more time, Lieutenant, if you would.",
        seeds=(
            (
                "Well Captain the Supply Depot is down the way to the left so if you want to "
                "check there that would be a good hint to so it will bring.",
                (1,),
                "scripted-replay",
            ),
        ),
    ),
    _Section(
        section_id="s12",
        banks=(
            _Bank(
                "A",
                "offering continued availability",
                on=(
                    "I will be around if you need me at any point.",
                    "you can find me here if anything comes up.",
                    "call on me whenever you need.",
                ),
                off=("I must leave for the day.",),
            ),
            _Bank(
                "B",
                "mentioning the upcoming mission brief",
                on=(
                    "until the mission brief this afternoon.",
                    "before the brief later today.",
                    "ahead of this afternoon's briefing.",
                ),
                off=("",),
            ),
        ),
        layout=(0, 1),
        repeat_prompt="Sorry, Lieutenant, could you repeat that?",
        seeds=(
            (
                "I will be around until the mission brief this afternoon if you need me "
                "at any point.",
                (1, 1),
                "scripted-replay",
            ),
        ),
    ),
    _Section(
        section_id="s13",
        banks=(
            _Bank(
                "A",
                "proposing a specific arrival time",
                on=(
                    "we will arrive at 0800 sharp.",
                    "my team will be there at eight hundred hours.",
                    "expect us at 0800 tomorrow morning.",
                    "we can be ready by 0700 hours.",
                ),
                off=("we will come by at some point.",),
            ),
            _Bank(
                "B",
                "confirming the meeting location",
                on=(
                    "at your staging area.",
                    "at the staging area by the main gate.",
                    "at your headquarters.",
                    "at the staging area near your headquarters.",
                ),
                off=("",),
            ),
            _Bank(
                "C",
                "thanking the officer for coordinating",
                on=(
                    "thank you for coordinating with us, Captain.",
                    "we are grateful for your cooperation.",
                    "I appreciate your coordination.",
                ),
                off=("",),
            ),
        ),
        layout=(0, 1, 2),
        repeat_prompt="Could you state that again, Lieutenant?",
        seeds=(
            (
                "We will arrive at your staging area at 0800 sharp tomorrow morning. "
                "Thank you for coordinating with us, Captain.",
                (1, 1, 1),
                "authored",
            ),
        ),
    ),
    _Section(
        section_id="s14",
        banks=(
            _Bank(
                "A",
                "wishing the officer well on his departure",
                on=(
                    "safe travels.",
                    "good luck with your preparations.",
                    "I wish you a smooth trip back.",
                ),
                off=("",),
            ),
            _Bank(
                "B",
                "using a respectful closing address",
                on=("goodbye Captain Wang, sir.", "farewell, Captain.", "until tomorrow, sir."),
                off=("goodbye.", "see you."),
            ),
        ),
        layout=(1, 0),
        repeat_prompt="Pardon, Lieutenant? Once more, please.",
        seeds=(
            (
                "Goodbye Captain Wang, sir. Safe travels, and it was an honor working with you.",
                (1, 1),
                "authored",
            ),
        ),
    ),
)


def _section(section_id: str) -> _Section:
    for section in _SECTIONS:
        if section.section_id == section_id:
            return section
    raise KeyError(section_id)


def feature_sets() -> dict[str, FeatureSet]:
    """Feature set registry for every bundled section."""
    out = {}
    for section in _SECTIONS:
        out[section.section_id] = FeatureSet(
            section_id=section.section_id,
            features=tuple(
                Feature(code=bank.code, description=bank.description)
                for bank in section.banks
            ),
        )
    return out


def default_templates() -> dict[str, SectionTemplates]:
    """One phrase template per label vector per section, plus seed rows."""
    out = {}
    for section in _SECTIONS:
        k = len(section.banks)
        templates = []
        for vector in product((0, 1), repeat=k):
            slots = []
            for item in section.layout:
                if isinstance(item, int):
                    bank = section.banks[item]
                    slots.append(bank.on if vector[item] else bank.off)
                else:
                    slots.append(item)
            templates.append(
                PhraseTemplate(
                    section_id=section.section_id,
                    labels=vector,
                    slots=tuple(slots),
                )
            )
        seeds = tuple(
            AnnotatedExample(
                section_id=section.section_id, text=text, labels=labels, source=source
            )
            for text, labels, source in section.seeds
        )
        out[section.section_id] = SectionTemplates(
            section_id=section.section_id,
            feature_count=k,
            templates=tuple(templates),
            seed_examples=seeds,
        )
    return out


def _ep(section_id: str, node_id: str) -> EvaluationPoint:
    section = _section(section_id)
    return EvaluationPoint(
        id=node_id,
        section_id=section_id,
        feature_set=feature_sets()[section_id],
        repeat_prompt=section.repeat_prompt,
    )


def build_scenario() -> Scenario:
    """The bundled four-scene scenario with fourteen evaluation points."""
    scene1 = Scene(
        id="scene-1",
        nodes=(
            AvatarLine(
                id="s1-brief",
                speaker=HEIST,
                text=(
                    "Good Morning. As you know, we are scheduled to meet our Chinese "
                    "counterparts for the first time today. It is important that you make "
                    "a good first impression. Unfortunately, I have had a requirement come "
                    "up last minute and will not able to meet the Chinese captain today. "
                    "I am having you go in my place. Please receive him cordially and "
                    "begin making plans with him as soon as possible."
                ),
            ),
            GuideNote(
                id="s1-guide",
                text=(
                    "You are a US Army lieutenant supporting a joint disaster relief "
                    "coalition with the Chinese army. Captain Heist cannot attend the "
                    "first meeting with Captain Wang, the Chinese liaison, so you will "
                    "represent him."
                ),
            ),
        ),
    )
    scene2 = Scene(
        id="scene-2",
        nodes=(
            GuideNote(
                id="s2-guide-1",
                text=(
                    "Captain Wang approaches. A first meeting calls for a formal greeting "
                    "with an honorific, and it is considered forward to ask after "
                    "someone's wellbeing before you know them. Greet him."
                ),
            ),
            _ep("s01", "ep-s01"),
            AvatarLine(id="s2-wang-1", speaker=WANG, text="Good morning, Lieutenant."),
            GuideNote(
                id="s2-guide-2",
                text="Confirm who you are speaking with: ask about his role in the coalition.",
            ),
            _ep("s02", "ep-s02"),
            AvatarLine(
                id="s2-wang-2",
                speaker=WANG,
                text="Yes, I am. I made arrangements with Captain Heist. Is he here?",
            ),
            GuideNote(
                id="s2-guide-3",
                text=(
                    "Explain why Captain Heist is absent and let Captain Wang know you "
                    "will stand in for him."
                ),
            ),
            _ep("s03", "ep-s03"),
            AvatarLine(id="s2-wang-3", speaker=WANG, text="Why couldn't he come?"),
            GuideNote(
                id="s2-guide-4",
                text=(
                    "Give the reason for the absence. A short apology and an assurance "
                    "of support go a long way."
                ),
            ),
            _ep("s04", "ep-s04"),
            AvatarLine(
                id="s2-wang-4",
                speaker=WANG,
                text="I understand. Let's begin preparing because we need to leave soon.",
            ),
            GuideNote(
                id="s2-guide-5",
                text="Show that you are ready to begin, and keep the address respectful.",
            ),
            _ep("s05", "ep-s05"),
        ),
    )
    scene3 = Scene(
        id="scene-3",
        nodes=(
            GuideNote(
                id="s3-guide-1",
                text=(
                    "Later that day, Captain Wang returns with questions about the "
                    "mission. Offer him your help."
                ),
            ),
            _ep("s06", "ep-s06"),
            AvatarLine(
                id="s3-wang-1",
                speaker=WANG,
                text="I'm Fine, Lieutenant. I just had some questions about the mission.",
            ),
            GuideNote(id="s3-guide-2", text="Invite him to share his concerns."),
            _ep("s07", "ep-s07"),
            AvatarLine(
                id="s3-wang-2",
                speaker=WANG,
                text=(
                    "Well, my team and I were wondering what kind of supplies your team "
                    "is planning on bringing."
                ),
            ),
            GuideNote(
                id="s3-guide-3",
                text=(
                    "Your own briefing is this afternoon and the plan is not final. Be "
                    "honest about that, and consider inviting him along."
                ),
            ),
            _ep("s08", "ep-s08"),
            AvatarLine(
                id="s3-wang-3",
                speaker=WANG,
                text=(
                    "I completely understand, but even some basic information would be "
                    "useful for me to start my planning."
                ),
            ),
            GuideNote(
                id="s3-guide-4",
                text="He is pressing politely. Share what you can and explain why details are limited.",
            ),
            _ep("s09", "ep-s09"),
            AvatarLine(
                id="s3-wang-4",
                speaker=WANG,
                text=(
                    "Please Lieutenant, it would help me a great deal if I knew exactly "
                    "what supplies you have for the mission."
                ),
            ),
            GuideNote(
                id="s3-guide-5",
                text="List the supplies you can already confirm and defer the rest to the brief.",
            ),
            _ep("s10", "ep-s10"),
            AvatarLine(
                id="s3-wang-5",
                speaker=WANG,
                text=(
                    "Is there any way for me to get a look at the supply depot where you "
                    "keep everything? I don't want to bother you any longer, so if it "
                    "will save you time, I'll walk over myself."
                ),
            ),
            GuideNote(id="s3-guide-6", text="Give him directions to the supply depot."),
            _ep("s11", "ep-s11"),
            AvatarLine(
                id="s3-wang-6",
                speaker=WANG,
                text="Oh, well thank you Lieutenant! Good luck on the planning.",
            ),
            GuideNote(
                id="s3-guide-7",
                text="Close the conversation by letting him know how to reach you before the brief.",
            ),
            _ep("s12", "ep-s12"),
        ),
    )
    scene4 = Scene(
        id="scene-4",
        nodes=(
            GuideNote(
                id="s4-guide-1",
                text=(
                    "The afternoon brief has concluded. Captain Wang prepares to return "
                    "to his unit and wants to settle tomorrow's schedule."
                ),
            ),
            AvatarLine(
                id="s4-wang-1",
                speaker=WANG,
                text=(
                    "Lieutenant, the briefing was very helpful. When and where should my "
                    "team meet yours tomorrow?"
                ),
            ),
            GuideNote(
                id="s4-guide-2",
                text="Propose a specific time and place, and thank him for coordinating.",
            ),
            _ep("s13", "ep-s13"),
            AvatarLine(
                id="s4-wang-2",
                speaker=WANG,
                text="Very well, Lieutenant. We will be there. Until tomorrow.",
            ),
            GuideNote(id="s4-guide-3", text="Take your leave respectfully."),
            _ep("s14", "ep-s14"),
            AvatarLine(
                id="s4-wang-3",
                speaker=WANG,
                text="Thank you, Lieutenant. I look forward to working with you.",
            ),
            EndNode(id="end"),
        ),
    )
    return Scenario(id="dme-coalition", scenes=(scene1, scene2, scene3, scene4))


def replay_lines() -> list[str]:
    """The scripted trainee lines, one per evaluation point in path order."""
    return [
        "Good morning Captain Wang.",
        "Are you the leader of the Chinese component of the coalition.",
        "Unfortunately Captain Heist had prior duties and I will be taking his place.",
        "He unfortunately had a prior engagements with other officers.",
        "Great let's get started sir.",
        "Captain Wang is there anything I can help you with?",
        "Well what are your concerns officer.",
        "Well Captain we haven't worked out all the Kinks but if you would like to meet "
        "are at our briefing later this afternoon you're more than welcome to come.",
        "Well Captain we haven't worked out all the Kinks but if you would like to meet "
        "are at our briefing later this afternoon you're more than welcome to come.",
        "Well caps and we plan on bringing food water and other Hospital related equipment "
        "such as medicine to the site but we aren't sure what sort of Weaponry will be "
        "using but that will be discussed in the brief.",
        "Well Captain the Supply Depot is down the way to the left so if you want to check "
        "there that would be a good hint to so it will bring.",
        "I will be around until the mission brief this afternoon if you need me at any point.",
        "We will arrive at your staging area at 0800 sharp tomorrow morning. Thank you for "
        "coordinating with us, Captain.",
        "Goodbye Captain Wang, sir. Safe travels, and it was an honor working with you.",
    ]


def default_corpus(count_per_section: int = 128, seed: int = 42):
    """Synthesize the bundled corpus. Model quality figures quoted in the
    docs are relative to this synthetic data, not to any field recording."""
    from .corpus import synthesize_corpus

    return synthesize_corpus(default_templates(), count_per_section, seed)
