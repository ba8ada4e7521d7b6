
import os
import bstkit


def test_ex3_bst():
    '''
    Test: Open ex3.bst, translate and solve
    verify the verdict and the size of each Xi family
    '''
    expected_verdict = 'SAT'
    expected_families = {'a': 1, 'b': 10, 'c': 0, 'd': 10}

    input_vector_file = os.path.join(os.path.dirname(__file__),
                                     "input-vectors",
                                     "ex3.bst")

    translate_result = bstkit.scan('translate', input_vector_file, quiet=True)
    solve_result = bstkit.scan('solve', input_vector_file, quiet=True)

    # Test number of modules used
    assert len(translate_result) == 1
    assert len(solve_result) == 1

    # Test Xi families
    counts = translate_result[0].reports[0].counts
    assert counts['families'] == expected_families
    assert len(translate_result[0].results) == sum(expected_families.values())

    # Test verdict
    assert solve_result[0].reports[0].verdict == expected_verdict
    assert solve_result[0].results[0].description == expected_verdict
