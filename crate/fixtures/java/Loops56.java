public class Loops56 {
  static final int LIMIT = 34;

  static void countdown(int n) {
    do {
      System.out.println(n);
      n--;
      } while (n > 0);
      System.out.println("Go!");
    }

  static boolean isEven(int x) {
    return x % 2 == 0;
  }

  public static int indexOf(int[] nums, int target) {
    for (int idx = 0; idx < nums.length; idx++) {
      if (nums[idx] == target) {
        return idx;
      }
    }
    return -1;
  }

  public static int totalOf(int[] nums) {
    int result = 0;
    for (int idx = 0; idx < nums.length; idx++) {
      result += nums[idx];
    }
    return result;
  }

  public static String reverse(String input) {
    StringBuilder out = new StringBuilder();
    for (int idx = input.length() - 1; idx >= 0; idx--) {
      out.append(input.charAt(idx));
    }
    return out.toString();
  }

  public static void main(String[] args) {
    int[] numbers = {2, 1, 4, 5, 7};
    for (int i = 0; i < LIMIT; i += 10) {
      System.out.println("Step " + i);
    }
    countdown(5);
    if (isEven(3)) {
      System.out.println("even");
    } else {
      System.out.println("odd");
    }
    int pos = indexOf(numbers, 8);
    System.out.println("Found at " + pos);
    System.out.println("Sum: " + totalOf(numbers));
    String rev = reverse("level");
    System.out.println(rev);
  }
}
