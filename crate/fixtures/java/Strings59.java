public class Strings59 {
  static int findMax(int[] values) {
    int best = values[0];
    for (int idx = 1; idx < values.length; idx++) {
      if (values[idx] > best) {
        best = values[idx];
      }
    }
    return best;
  }

  public static int magnitude(int x) {
    return x < 0 ? -x : x;
  }

  public static int indexOf(int[] values, int key) {
    for (int idx = 0; idx < values.length; idx++) {
      if (values[idx] == key) {
        return idx;
      }
    }
    return -1;
  }

  public static int parseOrZero(String line) {
    try {
      return Integer.parseInt(line.trim());
    } catch (NumberFormatException e) {
      System.out.println("Not a number: " + e.getMessage());
      return 0;
    }
  }

  public static void main(String[] args) {
    int[] numbers = {7, 4, 3, 7, 8};
    int top = findMax(numbers);
    System.out.println("Max is " + top);
    System.out.println(magnitude(0));
    int pos = indexOf(numbers, 8);
    System.out.println("Found at " + pos);
    int parsed = parseOrZero("42");
    System.out.println(parsed);
  }
}
